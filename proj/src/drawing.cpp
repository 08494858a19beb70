#include "monodraw/drawing.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <ios>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace monodraw {

using json = nlohmann::ordered_json;

int Drawing::index_of(const std::string& id) const {
    for (int i = 0; i < n(); ++i)
        if (label[i] == id) return i;
    throw DrawingError("drawing: unknown vertex id '" + id + "'");
}

void Drawing::validate() const {
    std::unordered_set<std::string> seen;
    for (const std::string& id : label) {
        if (id.empty()) throw DrawingError("drawing: empty vertex id");
        if (!seen.insert(id).second)
            throw DrawingError("drawing: duplicate vertex id '" + id + "'");
    }
    if (kind == CoordKind::exact_int) {
        if ((int)ipos.size() != n() || !rpos.empty() || !rrays.empty() || !bray_dir.empty())
            throw DrawingError("drawing: coordinate arrays do not match kind int");
    } else {
        if ((int)rpos.size() != n() || !ipos.empty() || !irays.empty())
            throw DrawingError("drawing: coordinate arrays do not match kind float");
        if (precision_bits < 1) throw DrawingError("drawing: bad precision");
        if ((int)bpos.size() != (high_precision() ? n() : 0))
            throw DrawingError("drawing: wide coordinate array does not match the precision");
        if (bray_dir.size() != (high_precision() ? rrays.size() : 0))
            throw DrawingError("drawing: wide ray array does not match the precision");
    }
    if (root && seen.find(*root) == seen.end())
        throw DrawingError("drawing: root id '" + *root + "' is not a vertex");
    for (const auto& e : edges) {
        if (e[0] < 0 || e[0] >= n() || e[1] < 0 || e[1] >= n() || e[0] == e[1])
            throw DrawingError("drawing: edge endpoint out of range");
        bool zero;
        if (kind == CoordKind::exact_int)
            zero = ipos[e[0]] == ipos[e[1]];
        else if (high_precision())
            zero = bpos[e[0]] == bpos[e[1]];
        else
            zero = rpos[e[0]].x == rpos[e[1]].x && rpos[e[0]].y == rpos[e[1]].y;
        if (zero)
            throw DrawingError("drawing: zero-length edge " + label[e[0]] + "-" + label[e[1]]);
    }
    auto check_ray_leaf = [&](int v) {
        if (v < 0 || v >= n()) throw DrawingError("drawing: ray vertex out of range");
    };
    for (const auto& r : irays) {
        check_ray_leaf(r.leaf);
        if (r.dir.x == 0 && r.dir.y == 0) throw DrawingError("drawing: zero ray direction");
    }
    for (const auto& r : rrays) {
        check_ray_leaf(r.leaf);
        if (r.dir.x == 0 && r.dir.y == 0) throw DrawingError("drawing: zero ray direction");
    }
}

namespace {

std::string int_to_string(i64 v) { return std::to_string(v); }

std::string real_to_string(long double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    if (res.ec != std::errc())
        throw DrawingError("drawing: cannot format coordinate");
    return std::string(buf, res.ptr);
}

std::string big_to_string(const BigReal& v) {
    return v.str(std::numeric_limits<BigReal>::max_digits10, std::ios_base::scientific);
}

BigReal parse_big_coord(const std::string& s) {
    try {
        return BigReal(s);
    } catch (const std::exception&) {
        throw DrawingError("drawing: bad coordinate '" + s + "'");
    }
}

i64 parse_int_coord(const std::string& s) {
    i64 v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw DrawingError("drawing: bad integer coordinate '" + s + "'");
    return v;
}

long double parse_real_coord(const std::string& s) {
    long double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw DrawingError("drawing: bad coordinate '" + s + "'");
    return v;
}

}  // namespace

std::string drawing_to_json_text(const Drawing& d) {
    d.validate();
    json j;
    if (d.kind == CoordKind::exact_int) {
        j["kind"] = "int";
    } else if (d.precision_bits == 53) {
        j["kind"] = "float64";
    } else {
        j["kind"] = "float" + std::to_string(d.precision_bits);
    }
    if (d.root) j["root"] = *d.root;
    json verts = json::array();
    for (int v = 0; v < d.n(); ++v) {
        json jv;
        jv["id"] = d.label[v];
        if (d.kind == CoordKind::exact_int) {
            jv["x"] = int_to_string(d.ipos[v].x);
            jv["y"] = int_to_string(d.ipos[v].y);
        } else if (d.high_precision()) {
            jv["x"] = big_to_string(d.bpos[v].x);
            jv["y"] = big_to_string(d.bpos[v].y);
        } else {
            jv["x"] = real_to_string(d.rpos[v].x);
            jv["y"] = real_to_string(d.rpos[v].y);
        }
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    json es = json::array();
    for (const auto& e : d.edges) es.push_back(json::array({d.label[e[0]], d.label[e[1]]}));
    j["edges"] = std::move(es);
    if (!d.irays.empty() || !d.rrays.empty()) {
        json rays = json::array();
        if (d.kind == CoordKind::exact_int) {
            for (const auto& r : d.irays) {
                json jr;
                jr["leaf"] = d.label[r.leaf];
                jr["dx"] = int_to_string(r.dir.x);
                jr["dy"] = int_to_string(r.dir.y);
                rays.push_back(std::move(jr));
            }
        } else if (d.high_precision()) {
            for (size_t i = 0; i < d.rrays.size(); ++i) {
                json jr;
                jr["leaf"] = d.label[d.rrays[i].leaf];
                jr["dx"] = big_to_string(d.bray_dir[i].x);
                jr["dy"] = big_to_string(d.bray_dir[i].y);
                rays.push_back(std::move(jr));
            }
        } else {
            for (const auto& r : d.rrays) {
                json jr;
                jr["leaf"] = d.label[r.leaf];
                jr["dx"] = real_to_string(r.dir.x);
                jr["dy"] = real_to_string(r.dir.y);
                rays.push_back(std::move(jr));
            }
        }
        j["rays"] = std::move(rays);
    }
    return j.dump(2) + "\n";
}

Drawing drawing_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DrawingError(std::string("drawing: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j.contains("vertices") || !j.contains("edges"))
        throw DrawingError("drawing: expected object with kind, vertices, edges");
    Drawing d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "int") {
        d.kind = CoordKind::exact_int;
    } else if (kind.rfind("float", 0) == 0) {
        d.kind = CoordKind::real;
        const std::string bits = kind.substr(5);
        int b = 0;
        auto res = std::from_chars(bits.data(), bits.data() + bits.size(), b);
        if (res.ec != std::errc() || res.ptr != bits.data() + bits.size() || b < 1)
            throw DrawingError("drawing: bad kind '" + kind + "'");
        d.precision_bits = b;
    } else {
        throw DrawingError("drawing: bad kind '" + kind + "'");
    }
    if (j.contains("root")) d.root = j.at("root").get<std::string>();

    std::unordered_map<std::string, int> index;
    for (const auto& jv : j.at("vertices")) {
        if (!jv.is_object() || !jv.contains("id") || !jv.contains("x") || !jv.contains("y"))
            throw DrawingError("drawing: vertex needs id, x, y");
        const std::string id = jv.at("id").get<std::string>();
        if (!index.emplace(id, d.n()).second)
            throw DrawingError("drawing: duplicate vertex id '" + id + "'");
        d.label.push_back(id);
        const std::string xs = jv.at("x").get<std::string>();
        const std::string ys = jv.at("y").get<std::string>();
        if (d.kind == CoordKind::exact_int) {
            d.ipos.push_back({parse_int_coord(xs), parse_int_coord(ys)});
        } else if (d.high_precision()) {
            d.bpos.push_back({parse_big_coord(xs), parse_big_coord(ys)});
            d.rpos.push_back(narrow(d.bpos.back()));
        } else {
            d.rpos.push_back({parse_real_coord(xs), parse_real_coord(ys)});
        }
    }
    auto lookup = [&](const json& jid) {
        const std::string id = jid.get<std::string>();
        auto it = index.find(id);
        if (it == index.end()) throw DrawingError("drawing: unknown vertex id '" + id + "'");
        return it->second;
    };
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2)
            throw DrawingError("drawing: edge must be a two-element array");
        d.edges.push_back({lookup(je[0]), lookup(je[1])});
    }
    if (j.contains("rays")) {
        for (const auto& jr : j.at("rays")) {
            if (!jr.is_object() || !jr.contains("leaf") || !jr.contains("dx") || !jr.contains("dy"))
                throw DrawingError("drawing: ray needs leaf, dx, dy");
            const int leaf = lookup(jr.at("leaf"));
            const std::string dx = jr.at("dx").get<std::string>();
            const std::string dy = jr.at("dy").get<std::string>();
            if (d.kind == CoordKind::exact_int) {
                d.irays.push_back({leaf, {parse_int_coord(dx), parse_int_coord(dy)}});
            } else if (d.high_precision()) {
                d.bray_dir.push_back({parse_big_coord(dx), parse_big_coord(dy)});
                d.rrays.push_back({leaf, narrow(d.bray_dir.back())});
            } else {
                d.rrays.push_back({leaf, {parse_real_coord(dx), parse_real_coord(dy)}});
            }
        }
    }
    d.validate();
    return d;
}

}  // namespace monodraw
