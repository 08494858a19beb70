#pragma once
// Independent geometric verification of drawings.  Every property claimed
// by the constructions is re-checked here from coordinates alone: pairwise
// segment/ray intersection, the open-half-plane criterion for monotone
// paths, strong monotonicity margins, face convexity with leaf rays, and
// angular resolution.  Integer drawings are checked with exact arithmetic;
// floating drawings use a relative epsilon band.

#include "monodraw/drawing.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace monodraw {

struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckReport {
    std::string check;
    bool pass = true;
    std::string detail;  // human-readable witness or statistics
    std::vector<std::string> witness_vertices;
    std::vector<std::array<std::string, 2>> witness_edges;
    std::optional<double> measured;
};

struct VerifyOptions {
    long double eps = 1e-9L;     // relative band for floating drawings
    bool with_rays = true;       // include leaf rays in intersection tests
};

// No two edges (or leaf rays) share a point except a common endpoint.
CheckReport check_crossing_free(const Drawing& d, const VerifyOptions& opt = {});

// Tree drawings: for every vertex pair the path between them has all edge
// directions inside an open half-plane (equivalently the circular gap of
// the direction set exceeds pi).  Incremental cone sweep; O(n^2) pairs at
// O(1) amortized each.
CheckReport check_monotone(const Drawing& d, const VerifyOptions& opt = {});

// For every ordered pair (a, b): b is reachable from a along edges whose
// projection on b - a is positive (trees: the unique path is inspected
// directly).  Floating drawings accept margins above -eps*|w|*|b-a|.
CheckReport check_strong_monotone(const Drawing& d, const VerifyOptions& opt = {});

// Tree drawings with rays: every face angle <= pi (strict: < pi, tolerating
// straight angles only at degree-2 vertices), bounding rays of each face
// diverge, and the drawing is crossing-free.  Non-tree drawings are checked
// for (strictly) convex position of all vertices instead.
CheckReport check_convex(const Drawing& d, const VerifyOptions& opt = {});
CheckReport check_strictly_convex(const Drawing& d, const VerifyOptions& opt = {});

// Minimum angle between edges sharing a vertex, with the realizing edge
// pair; pass is the comparison against min_radians when given.
CheckReport check_resolution(const Drawing& d, std::optional<double> min_radians = {},
                             const VerifyOptions& opt = {});

// Single-pair primitives used for witness revalidation and property tests.
bool monotone_pair(const Drawing& d, int a, int b, const VerifyOptions& opt = {});
bool strong_monotone_pair(const Drawing& d, int a, int b,
                          const VerifyOptions& opt = {});

// All path edge directions strictly inside the open half-plane with normal
// side dir: <w, dir> > 0 for every w.
bool path_monotone_wrt(const std::vector<Vec2i>& path_edges, Vec2i dir);
bool path_monotone_wrt(const std::vector<Vec2r>& path_edges, Vec2r dir,
                       long double eps = 0.0L);

// Sampling oracle for the half-plane criterion: tries 4096 directions plus
// perturbed normals of every edge; agrees with the exact criterion on
// integer inputs.
bool oracle_monotone_pair(const std::vector<Vec2i>& path_edges);

// Runs the named checks ("crossing", "monotone", "strong", "convex",
// "strict-convex", "resolution") and returns one report each.
std::vector<CheckReport> run_checks(const Drawing& d,
                                    const std::vector<std::string>& names,
                                    const VerifyOptions& opt = {},
                                    std::optional<double> min_resolution = {});

std::string reports_to_json_text(const std::vector<CheckReport>& reports);

}  // namespace monodraw
