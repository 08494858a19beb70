#pragma once
// Rooted ordered trees: storage with an explicit child order (the plane
// embedding), text/JSON input formats, deterministic generators, and the
// reduction of arbitrary trees to proper binary trees together with the
// map needed to project a drawing of the binary tree back.

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace monodraw {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

struct TreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RootedOrderedTree {
  public:
    int root = -1;
    std::vector<std::string> label;           // vertex index -> id
    std::vector<int> parent;                  // -1 at the root
    std::vector<std::vector<int>> children;   // ordered left to right

    int n() const { return (int)label.size(); }

    // Appends a vertex; par == -1 makes it the root.  Labels must be unique.
    int add_vertex(const std::string& lbl, int par);

    // Replaces the label of v, keeping uniqueness.
    void rename_vertex(int v, const std::string& lbl);

    int index_of(const std::string& lbl) const {
        auto it = index_.find(lbl);
        return it == index_.end() ? -1 : it->second;
    }

    int degree(int v) const { return (int)children[v].size() + (parent[v] >= 0 ? 1 : 0); }
    bool is_leaf(int v) const { return children[v].empty(); }
    int out_degree(int v) const { return (int)children[v].size(); }

    // Number of vertices of undirected degree <= 1 (isolated root counts).
    int leaf_count() const;

    bool operator==(const RootedOrderedTree& o) const {
        return root == o.root && label == o.label && children == o.children;
    }

  private:
    std::unordered_map<std::string, int> index_;
};

// ---- input formats -------------------------------------------------------

// Parenthesized form: node := '(' node (',' node)* ')' label? | label.
// Unlabeled nodes receive fresh labels "#0", "#1", ... in parse order.
RootedOrderedTree parse_tree_text(const std::string& text);
std::string serialize_tree_text(const RootedOrderedTree& t);

// JSON form: {"root": id, "children": {id: [id, ...]}}.
RootedOrderedTree tree_from_json_text(const std::string& text);
std::string tree_to_json_text(const RootedOrderedTree& t);

// Auto-detects the two formats (leading '{' selects JSON).
RootedOrderedTree parse_tree_auto(const std::string& text);

// ---- validation ----------------------------------------------------------

// First vertex (in index order) of undirected degree exactly 2, if any.
std::optional<int> find_degree2_vertex(const RootedOrderedTree& t);
inline bool validate_no_degree2(const RootedOrderedTree& t) {
    return !find_degree2_vertex(t).has_value();
}

// Proper binary shape: root of degree 2, every other vertex of degree 1 or 3.
bool is_proper_binary(const RootedOrderedTree& t);

// ---- generators (deterministic in the seed) -------------------------------

RootedOrderedTree gen_star(int leaves);
RootedOrderedTree gen_complete_binary(int depth);
RootedOrderedTree gen_caterpillar(int n, unsigned long long seed);
// Random attachment respecting max_deg; with no_deg2, internal vertices get
// at least two children so no vertex ends up with degree 2 (infeasible for
// n == 3, and for odd n when max_deg == 3).
RootedOrderedTree gen_random_tree(int n, int max_deg, unsigned long long seed,
                                  bool no_deg2 = false);

// ---- binary-tree reduction ------------------------------------------------

struct BinarizationMap {
    // Original vertex index -> path of binary-tree vertex indices; the first
    // entry carries the original label and position.
    std::vector<std::vector<int>> path_of;
    // Binary-tree vertex -> original vertex (-1 for dummies).
    std::vector<int> origin;
    // All binary-tree vertices with no original counterpart.
    std::vector<int> dummies;
};

struct Binarized {
    RootedOrderedTree tree;
    BinarizationMap map;
};

// Re-roots at a degree-2 vertex (subdividing an edge if none exists), gives
// every remaining degree-2 vertex a dummy leaf, and replaces each vertex of
// out-degree k > 2 by a left-leaning chain carrying the original children as
// right children in their original left-to-right order.  Requires n >= 2.
Binarized binarize(const RootedOrderedTree& t);

}  // namespace monodraw
