#pragma once
// Strongly monotone, strictly convex drawings of biconnected outerplanar
// graphs: the outer cycle becomes a chain of distinct primitive vectors
// with strictly positive coordinates in strictly decreasing slope order, so
// every forward difference of cycle vertices points into the open first
// quadrant; chords are drawn straight inside the convex cycle.

#include "monodraw/drawing.hpp"
#include "monodraw/graph.hpp"

namespace monodraw {

// Integer drawing; coordinates stay within (n-1) times the largest vector
// coordinate, which is O(sqrt(n)).
Drawing draw_outerchain(const PlaneOuterGraph& g);

}  // namespace monodraw
