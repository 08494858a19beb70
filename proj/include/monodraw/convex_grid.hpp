#pragma once
// Strictly convex (and monotone) grid drawings of trees without degree-2
// vertices.  Edges are ranked by an inorder-style traversal, the ranks are
// mapped to primitive vectors picked counterclockwise from three cones so
// that sibling edges and whole subtrees stay inside half-planes, and every
// vertex is placed by summing edge vectors from the root.  A second
// construction trades grid size for near-optimal angular resolution by
// spreading leaf edges over a full-circle fan.

#include "monodraw/drawing.hpp"
#include "monodraw/primvec.hpp"
#include "monodraw/tree.hpp"

#include <array>
#include <unordered_map>
#include <vector>

namespace monodraw {

struct RankAssignment {
    // rank[e] for edge e identified by its child endpoint; ranks are the
    // integers 1..n-1 in traversal order.
    std::vector<int> rank_of_child;  // indexed by child vertex, root -> 0
    std::vector<int> child_of_rank;  // rank -> child endpoint, 1-based
};

// Visits the leftmost child first, then numbers the parent edge, then the
// remaining children left to right.
RankAssignment assign_ranks(const RootedOrderedTree& t);

struct SlopePlan {
    int d = 0;                    // grid bound of the fan vectors
    long long pool = 0;           // size of the generating vector pool
    std::vector<Vec2i> vec_of_rank;  // 1-based; counterclockwise in rank order
    std::array<long long, 3> group_edges{};  // real edges served per cone
};

// Chooses one vector per rank from three cones ([0,pi/4], [3pi/4,pi],
// [3pi/2,7pi/4]): the root's extended subtrees are split into up to three
// consecutive runs (all non-empty once the root has three children or
// more), each run is padded to a common length with discardable single-edge
// placeholders, and rank j takes the j-th counterclockwise vector of the
// padded sequence.  Cone boundary directions are never used.
SlopePlan build_slope_plan(const RootedOrderedTree& t, const RankAssignment& ranks);
SlopePlan build_slope_plan(const RootedOrderedTree& t);

// Root at the origin, every other vertex at parent + vector(rank of its
// parent edge); leaf rays extend the leaf edges.  Linear time; coordinates
// stay within (n-1) * 4 * ceil(sqrt(n)) in absolute value.  Rejects trees
// with a degree-2 vertex.
Drawing draw_inorder(const RootedOrderedTree& t);

// Draws with an explicit edge-vector assignment (vector per child vertex).
// Used by tests and by the resolution-oriented construction below.
Drawing draw_from_vectors(const RootedOrderedTree& t,
                          const std::vector<Vec2i>& vec_of_child);

// Resolution-oriented variant: leaf edges take every other vector of a
// 2k-vector full-circle fan (k = number of leaves) in leaf order; each
// interior edge takes the admissible fan vector closest to the bisector of
// its subtree's extreme fan positions (ties toward the smaller angle).
// Convex and crossing-free, with angular resolution inherited from the fan.
// Rejects degree-2 vertices below the root; a degree-2 root is allowed (its
// two edges come out exactly antipodal).
Drawing draw_ce_grid(const RootedOrderedTree& t);

// Fan construction shared with tests: exactly count distinct directions
// covering the full circle, built from octant images of interior
// source-cone vectors, counterclockwise from angle 0.
struct CircleFan {
    int d = 0;
    long long pool = 0;          // size of the source-cone pool used
    std::vector<Vec2i> vecs;
};
CircleFan build_circle_fan(int count);

}  // namespace monodraw
