#include "monodraw/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace monodraw {

using json = nlohmann::ordered_json;

std::vector<std::array<int, 2>> PlaneOuterGraph::edges() const {
    std::vector<std::array<int, 2>> out;
    out.reserve(label.size() + chords.size());
    for (int i = 0; i < n(); ++i) out.push_back({i, (i + 1) % n()});
    for (const auto& c : chords) out.push_back(c);
    return out;
}

void PlaneOuterGraph::validate() const {
    if (n() < 3) throw GraphError("outer graph: need at least 3 cycle vertices");
    std::unordered_set<std::string> seen;
    for (const std::string& id : label) {
        if (id.empty()) throw GraphError("outer graph: empty vertex id");
        if (!seen.insert(id).second)
            throw GraphError("outer graph: duplicate vertex id '" + id + "'");
    }
    std::set<std::array<int, 2>> chord_set;
    for (const auto& c : chords) {
        int a = c[0], b = c[1];
        if (a < 0 || a >= n() || b < 0 || b >= n())
            throw GraphError("outer graph: chord endpoint out of range");
        if (a == b) throw GraphError("outer graph: chord joins a vertex to itself");
        if (a > b) std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n() - 1))
            throw GraphError("outer graph: chord duplicates a cycle edge");
        if (!chord_set.insert({a, b}).second)
            throw GraphError("outer graph: duplicate chord");
    }
    // Chords drawn inside the cycle must be nested or disjoint, never
    // interleaved (a < c < b < d).
    std::vector<std::array<int, 2>> cs(chord_set.begin(), chord_set.end());
    for (size_t i = 0; i < cs.size(); ++i) {
        for (size_t j = i + 1; j < cs.size(); ++j) {
            const int a = cs[i][0], b = cs[i][1];
            const int c = cs[j][0], d = cs[j][1];
            const bool c_inside = a < c && c < b;
            const bool d_inside = a < d && d < b;
            if (c_inside != d_inside && c != a && c != b && d != a && d != b)
                throw GraphError("outer graph: chords cross inside the disk");
        }
    }
}

PlaneOuterGraph outer_graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(std::string("outer graph: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cycle"))
        throw GraphError("outer graph: expected object with a cycle array");
    PlaneOuterGraph g;
    std::unordered_map<std::string, int> index;
    for (const auto& jid : j.at("cycle")) {
        const std::string id = jid.get<std::string>();
        if (!index.emplace(id, g.n()).second)
            throw GraphError("outer graph: duplicate vertex id '" + id + "'");
        g.label.push_back(id);
    }
    if (j.contains("chords")) {
        for (const auto& jc : j.at("chords")) {
            if (!jc.is_array() || jc.size() != 2)
                throw GraphError("outer graph: chord must be a two-element array");
            auto lookup = [&](const json& jid) {
                const std::string id = jid.get<std::string>();
                auto it = index.find(id);
                if (it == index.end())
                    throw GraphError("outer graph: unknown vertex id '" + id + "'");
                return it->second;
            };
            g.chords.push_back({lookup(jc[0]), lookup(jc[1])});
        }
    }
    g.validate();
    return g;
}

std::string outer_graph_to_json_text(const PlaneOuterGraph& g) {
    g.validate();
    json j;
    j["cycle"] = json::array();
    for (const std::string& id : g.label) j["cycle"].push_back(id);
    json cs = json::array();
    for (const auto& c : g.chords)
        cs.push_back(json::array({g.label[c[0]], g.label[c[1]]}));
    j["chords"] = std::move(cs);
    return j.dump(2) + "\n";
}

PlaneOuterGraph gen_outerplanar_random(int n, unsigned long long seed) {
    if (n < 3) throw GraphError("gen_outerplanar_random: need n >= 3");
    PlaneOuterGraph g;
    for (int i = 0; i < n; ++i) g.label.push_back("v" + std::to_string(i));
    // Triangulate random cycle intervals, then keep each chord with
    // probability 1/2: nested-or-disjoint by construction.
    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 2>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 2) continue;
        const int mid = a + 1 + (int)(rng() % (unsigned long long)(b - a - 1));
        if (mid != a + 1 && rng() % 2 == 0) g.chords.push_back({a, mid});
        if (mid != b - 1 && rng() % 2 == 0) g.chords.push_back({mid, b});
        stack.push_back({a, mid});
        stack.push_back({mid, b});
    }
    std::sort(g.chords.begin(), g.chords.end());
    g.validate();
    return g;
}

EdgeListGraph edge_graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(std::string("edge graph: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges"))
        throw GraphError("edge graph: expected object with an edges array");
    EdgeListGraph g;
    std::unordered_map<std::string, int> index;
    auto intern = [&](const json& jid) {
        const std::string id = jid.get<std::string>();
        auto [it, fresh] = index.emplace(id, g.n());
        if (fresh) g.label.push_back(id);
        return it->second;
    };
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2)
            throw GraphError("edge graph: edge must be a two-element array");
        const int a = intern(je[0]);
        const int b = intern(je[1]);
        if (a == b) throw GraphError("edge graph: self-loop at '" + g.label[a] + "'");
        g.edges.push_back({a, b});
    }
    return g;
}

std::string edge_graph_to_json_text(const EdgeListGraph& g) {
    json j;
    json es = json::array();
    for (const auto& e : g.edges)
        es.push_back(json::array({g.label[e[0]], g.label[e[1]]}));
    j["edges"] = std::move(es);
    return j.dump(2) + "\n";
}

EdgeListGraph gen_k4_with_leaves(int leaves_per_vertex) {
    if (leaves_per_vertex < 0)
        throw GraphError("gen_k4_with_leaves: negative leaf count");
    EdgeListGraph g;
    for (int i = 1; i <= 4; ++i) g.label.push_back("v" + std::to_string(i));
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k) g.edges.push_back({i, k});
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < leaves_per_vertex; ++k) {
            const int w = g.n();
            g.label.push_back("w" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
            g.edges.push_back({i, w});
        }
    }
    return g;
}

}  // namespace monodraw
