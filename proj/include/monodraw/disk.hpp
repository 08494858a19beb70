#pragma once
// Strongly monotone, strictly convex drawings of proper binary trees inside
// a disk: the root sits at the center with its two children on the
// horizontal diameter, and each vertex sends its children to the feet of
// the perpendiculars dropped onto the chords that split off its circular
// segment.  Arbitrary trees are handled by drawing the binary reduction and
// projecting the result back.

#include "monodraw/drawing.hpp"
#include "monodraw/tree.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace monodraw {

struct PrecisionExhausted : std::runtime_error {
    int depth;
    PrecisionExhausted(const std::string& msg, int depth_)
        : std::runtime_error(msg), depth(depth_) {}
};

// The construction's smallest feature shrinks roughly like C^(2^depth), so
// hardware floats stop resolving distinct feet around depth 7.  bits picks
// the working arithmetic: 53 (double), 64 (x87 extended), or 4096 (wide
// software floats, good to depth ~11).
struct PrecisionPolicy {
    int bits = 53;
    long double check_eps = 1e-9L;
};

struct CircularSegment {
    Vec2r chord_a;
    Vec2r chord_b;
};

struct ChildPlacement {
    Vec2r ray_hit;               // where the perpendicular ray meets the circle
    Vec2r left;                  // foot of the perpendicular onto the left chord
    Vec2r right;
    CircularSegment left_segment;
    CircularSegment right_segment;
};

// One refinement step on the unit-radius disk centered at the origin:
// v lies on the chord of seg; the ray from v perpendicular to the chord
// (away from the center) hits the circle and splits the segment in two.
// Throws PrecisionExhausted via draw_disk when feet degenerate.
ChildPlacement place_children(Vec2r v, const CircularSegment& seg);

// Drawing of a proper binary tree (root degree 2, other degrees 1 or 3) on
// the unit disk.  Coordinates are floating point at the policy precision;
// no crossing, every vertex pair is connected by a strongly monotone path,
// and the drawing is strictly convex (the degree-2 root keeps a straight
// angle).  segments_out, when given, receives the segment of every
// non-root vertex for containment checks (rounded to long double under the
// wide policy).
Drawing draw_disk(const RootedOrderedTree& t, const PrecisionPolicy& policy = {},
                  std::vector<CircularSegment>* segments_out = nullptr);

// Restriction of a binary-reduction drawing to the original tree: every
// original vertex keeps the position of the head of its substitute path,
// original edges are drawn straight, dummies disappear.
Drawing project_drawing(const Drawing& binary_drawing, const Binarized& b,
                        const RootedOrderedTree& original);

// binarize + draw_disk + project_drawing.  Accepts any tree with >= 2
// vertices (degree-2 vertices allowed); the result is strongly monotone
// for every ordered vertex pair of the original tree.
Drawing draw_strong(const RootedOrderedTree& t, const PrecisionPolicy& policy = {});

}  // namespace monodraw
