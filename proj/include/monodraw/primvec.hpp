#pragma once
// Primitive integer vectors with pairwise-distinct slopes: enumeration of
// the irreducible fractions of bounded denominator as grid vectors, cone
// transforms, octant filling, and exact minimum-angle queries.  These fans
// drive the angular resolution of the grid drawings.

#include "monodraw/geom.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace monodraw {

using VectorSet = std::vector<Vec2i>;

// All vectors (x, y) with 0 <= x <= y <= d and gcd(x, y) = 1, ordered by
// increasing slope x/y; as directions they sweep the cone [pi/4, pi/2]
// from the y-axis down to the diagonal.  Runs in time linear in the output.
VectorSet farey_vectors(int d);

// |farey_vectors(d)| = 1 + sum of Euler phi over 1..d, computed without
// enumerating the set.
long long farey_size(int d);

// Smallest denominator bound that yields at least k vectors, starting from
// ceil(pi^2 * sqrt(k) / 3) and increasing while short.
int select_d_for(long long k);

// Consecutive vectors (p,q),(r,s) in slope order satisfy q*r - p*s = 1.
bool verify_neighbor_identity(const VectorSet& vs);

enum class Cone { c1, c2, c3 };  // [0,pi/4], [3pi/4,pi], [3pi/2,7pi/4]

// Maps vectors from the source cone [pi/4, pi/2]:
//   c1: (x,y) -> (y,x)      reflection on the diagonal
//   c2: (x,y) -> (-y,x)     quarter turn counterclockwise
//   c3: (x,y) -> (x,-y)     reflection on the x-axis (c1 then (a,b)->(b,-a))
Vec2i map_to_cone(Vec2i v, Cone cone);
VectorSet map_to_cone(const VectorSet& vs, Cone cone);

// All eight reflections (+-x, +-y swapped or not) of the given source-cone
// vectors, deduplicated and sorted counterclockwise from angle 0.
VectorSet octant_fill(const VectorSet& vs);

struct MinAnglePair {
    double radians;
    Vec2i a;
    Vec2i b;
};

// Minimum unsigned angle over all pairs, with a realizing pair as witness;
// comparisons are exact, only the reported angle is floating point.
// Requires at least two vectors with pairwise-distinct directions.
MinAnglePair min_pairwise_angle(const VectorSet& vs);

// Lower bound on the pairwise angle of k vectors drawn from a pool of size
// pool = c * k: 3/(2 pi^2 c k) - 9/(4 pi^4 c^2 k^2), in radians.
double fan_angle_lower_bound(long long pool, long long k);

}  // namespace monodraw
