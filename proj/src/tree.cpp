#include "monodraw/tree.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <random>
#include <utility>

namespace monodraw {

using json = nlohmann::json;

static bool valid_label_char(char c) {
    return std::isalnum((unsigned char)c) || c == '_';
}

static bool valid_label(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), valid_label_char);
}

int RootedOrderedTree::add_vertex(const std::string& lbl, int par) {
    if (lbl.empty()) throw TreeError("empty vertex label");
    if (index_.count(lbl)) throw TreeError("duplicate vertex label '" + lbl + "'");
    int v = n();
    label.push_back(lbl);
    parent.push_back(par);
    children.emplace_back();
    index_.emplace(lbl, v);
    if (par < 0) {
        if (root >= 0) throw TreeError("tree already has a root");
        root = v;
    } else {
        children[par].push_back(v);
    }
    return v;
}

void RootedOrderedTree::rename_vertex(int v, const std::string& lbl) {
    if (lbl.empty()) throw TreeError("empty vertex label");
    if (index_.count(lbl)) throw TreeError("duplicate vertex label '" + lbl + "'");
    index_.erase(label[v]);
    label[v] = lbl;
    index_.emplace(lbl, v);
}

int RootedOrderedTree::leaf_count() const {
    int k = 0;
    for (int v = 0; v < n(); ++v)
        if (degree(v) <= 1) ++k;
    return k;
}

// ---- parenthesized text format --------------------------------------------

namespace {

struct TextCursor {
    const std::string& s;
    size_t i = 0;
    int line = 1;
    int col = 1;

    explicit TextCursor(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) advance();
    }
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

}  // namespace

RootedOrderedTree parse_tree_text(const std::string& text) {
    RootedOrderedTree t;
    TextCursor c(text);
    int anon = 0;
    std::vector<int> open;  // '(' nodes awaiting children and optional label

    auto read_label = [&]() {
        std::string lbl;
        while (c.peek() && valid_label_char(c.peek())) {
            lbl.push_back(c.peek());
            c.advance();
        }
        return lbl;
    };

    // Parses one node start; returns true when it opened a '(' group whose
    // children follow.  Nodes opened by '(' get placeholder labels "#<k>"
    // that a trailing label after ')' may replace.
    auto parse_node = [&](int parent) -> bool {
        c.skip_ws();
        try {
            if (c.peek() == '(') {
                c.advance();
                open.push_back(t.add_vertex("#" + std::to_string(anon++), parent));
                return true;
            }
            std::string lbl = read_label();
            if (lbl.empty()) c.fail("expected '(' or label");
            t.add_vertex(lbl, parent);
        } catch (const TreeError& e) {
            c.fail(e.what());
        }
        return false;
    };

    bool opened = parse_node(-1);
    while (!open.empty()) {
        if (opened) {
            opened = parse_node(open.back());
            continue;
        }
        c.skip_ws();
        char ch = c.peek();
        if (ch == ',') {
            c.advance();
            opened = parse_node(open.back());
        } else if (ch == ')') {
            c.advance();
            int v = open.back();
            open.pop_back();
            c.skip_ws();
            if (c.peek() && valid_label_char(c.peek())) {
                std::string lbl = read_label();
                try {
                    t.rename_vertex(v, lbl);
                } catch (const TreeError& e) {
                    c.fail(e.what());
                }
            }
        } else if (ch == '\0') {
            c.fail("unexpected end of input, expected ')' or ','");
        } else {
            c.fail(std::string("unexpected character '") + ch + "'");
        }
    }
    c.skip_ws();
    if (c.peek() != '\0') c.fail("trailing input after tree");
    return t;
}

std::string serialize_tree_text(const RootedOrderedTree& t) {
    if (t.root < 0) throw TreeError("empty tree");
    std::string out;
    struct Item {
        int v;
        bool close;
    };
    std::vector<Item> stack{{t.root, false}};
    std::vector<bool> needs_comma(t.n(), false);
    while (!stack.empty()) {
        auto [v, close] = stack.back();
        stack.pop_back();
        if (close) {
            out.push_back(')');
            if (t.label[v][0] != '#') out += t.label[v];
            continue;
        }
        if (needs_comma[v]) out.push_back(',');
        if (t.children[v].empty()) {
            if (t.label[v][0] == '#')
                throw TreeError("anonymous leaf '" + t.label[v] + "' cannot be serialized");
            out += t.label[v];
            continue;
        }
        out.push_back('(');
        stack.push_back({v, true});
        const auto& cs = t.children[v];
        for (int i = (int)cs.size() - 1; i >= 0; --i) {
            stack.push_back({cs[i], false});
            needs_comma[cs[i]] = i > 0;
        }
    }
    return out;
}

// ---- JSON format -----------------------------------------------------------

RootedOrderedTree tree_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, (int)e.byte);
    }
    if (!j.is_object() || !j.contains("root") || !j.contains("children"))
        throw TreeError("tree JSON requires 'root' and 'children'");
    std::string root_id = j.at("root").get<std::string>();
    const json& ch = j.at("children");
    if (!ch.is_object()) throw TreeError("'children' must be an object");

    RootedOrderedTree t;
    if (!valid_label(root_id)) throw TreeError("invalid vertex label '" + root_id + "'");

    // Vertices are added when first visited (leftmost branch first), so the
    // index order is the same preorder the text format produces.
    std::vector<std::pair<std::string, int>> stack{{root_id, -1}};
    while (!stack.empty()) {
        auto [id, par] = std::move(stack.back());
        stack.pop_back();
        if (t.index_of(id) >= 0)
            throw TreeError("vertex '" + id + "' appears twice (cycle or duplicate child)");
        const int v = t.add_vertex(id, par);
        auto it = ch.find(id);
        if (it == ch.end()) continue;
        if (!it->is_array())
            throw TreeError("children of '" + id + "' must be an array");
        for (auto cj = it->rbegin(); cj != it->rend(); ++cj) {
            std::string cid = cj->get<std::string>();
            if (!valid_label(cid)) throw TreeError("invalid vertex label '" + cid + "'");
            stack.push_back({std::move(cid), v});
        }
    }
    for (auto it = ch.begin(); it != ch.end(); ++it) {
        if (t.index_of(it.key()) < 0)
            throw TreeError("vertex '" + it.key() + "' is not connected to the root");
    }
    return t;
}

std::string tree_to_json_text(const RootedOrderedTree& t) {
    if (t.root < 0) throw TreeError("empty tree");
    json ch = json::object();
    for (int v = 0; v < t.n(); ++v) {
        if (t.children[v].empty()) continue;
        json arr = json::array();
        for (int c : t.children[v]) arr.push_back(t.label[c]);
        ch[t.label[v]] = std::move(arr);
    }
    json j;
    j["root"] = t.label[t.root];
    j["children"] = std::move(ch);
    return j.dump();
}

RootedOrderedTree parse_tree_auto(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return tree_from_json_text(text);
    return parse_tree_text(text);
}

// ---- validation ------------------------------------------------------------

std::optional<int> find_degree2_vertex(const RootedOrderedTree& t) {
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 2) return v;
    return std::nullopt;
}

bool is_proper_binary(const RootedOrderedTree& t) {
    if (t.root < 0 || t.n() == 1) return false;
    if (t.degree(t.root) != 2) return false;
    for (int v = 0; v < t.n(); ++v)
        if (v != t.root && t.degree(v) != 1 && t.degree(v) != 3) return false;
    return true;
}

// ---- generators ------------------------------------------------------------

RootedOrderedTree gen_star(int leaves) {
    if (leaves < 1) throw TreeError("star needs at least one leaf");
    RootedOrderedTree t;
    t.add_vertex("v0", -1);
    for (int i = 1; i <= leaves; ++i) t.add_vertex("v" + std::to_string(i), 0);
    return t;
}

RootedOrderedTree gen_complete_binary(int depth) {
    if (depth < 0) throw TreeError("depth must be nonnegative");
    RootedOrderedTree t;
    t.add_vertex("v0", -1);
    long long total = (1LL << (depth + 1)) - 1;
    int next = 1;
    for (int v = 0; next < total; ++v) {
        t.add_vertex("v" + std::to_string(next++), v);
        t.add_vertex("v" + std::to_string(next++), v);
    }
    return t;
}

RootedOrderedTree gen_caterpillar(int n, unsigned long long seed) {
    if (n < 2) throw TreeError("caterpillar needs at least two vertices");
    std::mt19937_64 rng(seed);
    int spine = std::max(2, n / 2);
    RootedOrderedTree t;
    t.add_vertex("v0", -1);
    for (int i = 1; i < spine; ++i) t.add_vertex("v" + std::to_string(i), i - 1);
    for (int i = spine; i < n; ++i)
        t.add_vertex("v" + std::to_string(i), (int)(rng() % (unsigned long long)spine));
    return t;
}

RootedOrderedTree gen_random_tree(int n, int max_deg, unsigned long long seed,
                                  bool no_deg2) {
    if (n < 1) throw TreeError("tree needs at least one vertex");
    if (max_deg < 2) throw TreeError("max_deg must be at least 2");
    std::mt19937_64 rng(seed);
    RootedOrderedTree t;
    t.add_vertex("v0", -1);
    if (n == 1) return t;

    if (!no_deg2) {
        // Uniform attachment among vertices below the degree cap.
        std::vector<int> eligible{0};
        for (int i = 1; i < n; ++i) {
            if (eligible.empty()) throw TreeError("infeasible (n, max_deg) combination");
            size_t k = rng() % eligible.size();
            int p = eligible[k];
            int v = t.add_vertex("v" + std::to_string(i), p);
            if (t.degree(p) >= max_deg) {
                eligible[k] = eligible.back();
                eligible.pop_back();
            }
            if (t.degree(v) < max_deg) eligible.push_back(v);
        }
        return t;
    }

    if (max_deg < 3) throw TreeError("no_deg2 requires max_deg >= 3");
    if (n == 3 || (max_deg == 3 && n % 2 != 0))
        throw TreeError("infeasible (n, max_deg) combination for no_deg2");
    // Grow from an edge: either give a leaf two children (degree 1 -> 3) or
    // add one child to an internal vertex below the cap; both moves keep
    // every degree off 2.
    int next = 1;
    t.add_vertex("v" + std::to_string(next++), 0);
    std::vector<int> leaves{0, 1};
    std::vector<int> internal;  // degree in [3, max_deg)
    int remaining = n - 2;
    while (remaining > 0) {
        bool do_single;
        if (remaining == 1) {
            if (internal.empty())
                throw TreeError("infeasible (n, max_deg) combination for no_deg2");
            do_single = true;
        } else {
            do_single = !internal.empty() && (rng() % 3 == 0);
        }
        if (do_single) {
            size_t k = rng() % internal.size();
            int p = internal[k];
            leaves.push_back(t.add_vertex("v" + std::to_string(next++), p));
            if (t.degree(p) >= max_deg) {
                internal[k] = internal.back();
                internal.pop_back();
            }
            --remaining;
        } else {
            size_t k = rng() % leaves.size();
            int p = leaves[k];
            leaves[k] = leaves.back();
            leaves.pop_back();
            leaves.push_back(t.add_vertex("v" + std::to_string(next++), p));
            leaves.push_back(t.add_vertex("v" + std::to_string(next++), p));
            if (t.degree(p) < max_deg) internal.push_back(p);
            remaining -= 2;
        }
    }
    return t;
}

// ---- binary-tree reduction ---------------------------------------------------

Binarized binarize(const RootedOrderedTree& t) {
    if (t.n() < 2) throw TreeError("binarize needs at least two vertices");

    // Cyclic neighbor order: parent edge first, then children left to right.
    std::vector<std::vector<int>> neigh(t.n());
    for (int v = 0; v < t.n(); ++v) {
        if (t.parent[v] >= 0) neigh[v].push_back(t.parent[v]);
        for (int c : t.children[v]) neigh[v].push_back(c);
    }

    // Children lists after re-rooting, preserving each cyclic order.
    std::vector<std::vector<int>> kids(t.n());
    auto kids_from = [&](int v, int from) {
        std::vector<int> out;
        const auto& nb = neigh[v];
        size_t pos = 0;
        while (nb[pos] != from) ++pos;
        for (size_t s = 1; s < nb.size(); ++s) out.push_back(nb[(pos + s) % nb.size()]);
        return out;
    };
    auto sweep = [&](std::vector<std::pair<int, int>> frontier) {
        for (size_t i = 0; i < frontier.size(); ++i) {
            auto [v, from] = frontier[i];
            if (from >= 0) kids[v] = kids_from(v, from);
            for (int c : kids[v]) frontier.push_back({c, v});
        }
    };

    auto deg2 = find_degree2_vertex(t);

    Binarized out;
    RootedOrderedTree& b = out.tree;
    BinarizationMap& map = out.map;
    map.path_of.assign(t.n(), {});
    int dummy_count = 0;
    auto fresh_dummy = [&](int par) {
        int v = b.add_vertex("#d" + std::to_string(dummy_count++), par);
        map.origin.push_back(-1);
        map.dummies.push_back(v);
        return v;
    };

    struct Frame {
        int orig;
        int head;
    };
    std::vector<Frame> stack;
    auto emit = [&](int orig, int par) {
        int head = b.add_vertex(t.label[orig], par);
        map.origin.push_back(orig);
        stack.push_back({orig, head});
        return head;
    };

    if (deg2) {
        int r = *deg2;
        kids[r] = neigh[r];  // both neighbors become children, parent side first
        sweep({{r, -1}});
        emit(r, -1);
    } else {
        // No degree-2 vertex: subdivide the first edge of the root's child
        // list and root the binary tree at the new vertex.
        int r0 = t.root;
        int c1 = t.children[r0][0];
        kids[r0] = kids_from(r0, c1);
        kids[c1] = kids_from(c1, r0);
        sweep({{r0, -1}, {c1, -1}});
        int dr = fresh_dummy(-1);
        emit(r0, dr);
        emit(c1, dr);
    }

    while (!stack.empty()) {
        auto [v, head] = stack.back();
        stack.pop_back();
        const auto& C = kids[v];
        int k = (int)C.size();
        map.path_of[v] = {head};
        if (k == 0) continue;
        if (k == 1) {
            // Degree-2 vertex: the pendant dummy leaf goes to the right.
            emit(C[0], head);
            fresh_dummy(head);
        } else if (k == 2) {
            emit(C[0], head);
            emit(C[1], head);
        } else {
            // Left-leaning chain: each chain vertex takes the next original
            // child from the right as its right child; the chain ends in a
            // dummy leaf.  Left-to-right child order is preserved.
            int cur = head;
            for (int i = 1; i <= k; ++i) {
                int nxt = fresh_dummy(cur);  // left child: rest of the chain
                map.path_of[v].push_back(nxt);
                emit(C[k - i], cur);         // right child: i-th from the right
                cur = nxt;
            }
        }
    }
    return out;
}

}  // namespace monodraw
