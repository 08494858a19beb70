#pragma once
// Non-tree inputs: biconnected outerplanar graphs given as an outer cycle
// plus non-crossing chords, and the fixed-topology counterexample family
// (a K4 with pendant leaves) whose drawings can never be strongly monotone.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodraw {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class PlaneOuterGraph {
  public:
    std::vector<std::string> label;          // cycle order v_1..v_n
    std::vector<std::array<int, 2>> chords;  // cycle-position pairs

    int n() const { return (int)label.size(); }

    // All edges (cycle then chords) as index pairs into the cycle order.
    std::vector<std::array<int, 2>> edges() const;

    // n >= 3, unique labels, chords join distinct non-adjacent cycle
    // vertices, no duplicate chords, no two chords interleave.
    void validate() const;
};

// JSON: {"cycle": [id, ...], "chords": [[a, b], ...]} with ids as labels.
PlaneOuterGraph outer_graph_from_json_text(const std::string& text);
std::string outer_graph_to_json_text(const PlaneOuterGraph& g);

// Random biconnected outerplanar graph: cycle 0..n-1 with a random
// non-crossing chord subset, deterministic in the seed.
PlaneOuterGraph gen_outerplanar_random(int n, unsigned long long seed);

// General graph as an edge list over labeled vertices.
struct EdgeListGraph {
    std::vector<std::string> label;
    std::vector<std::array<int, 2>> edges;
    int n() const { return (int)label.size(); }
};

// JSON: {"edges": [[a, b], ...]}; vertices in first-appearance order.
EdgeListGraph edge_graph_from_json_text(const std::string& text);
std::string edge_graph_to_json_text(const EdgeListGraph& g);

// K4 on v1..v4 with leaves_per_vertex pendant leaves w<i>_<j> at each v_i.
EdgeListGraph gen_k4_with_leaves(int leaves_per_vertex);

}  // namespace monodraw
