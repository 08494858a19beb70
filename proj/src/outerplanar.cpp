#include "monodraw/outerplanar.hpp"

#include <algorithm>

#include "monodraw/primvec.hpp"

namespace monodraw {

Drawing draw_outerchain(const PlaneOuterGraph& g) {
    g.validate();
    const int n = g.n();
    const int need = n - 1;

    // Pool of primitive vectors strictly inside the first quadrant for a
    // given denominator bound d: the interior fan entries (0 < x < y),
    // their swaps (y, x), and the diagonal (1, 1).  Smallest d whose pool
    // covers the chain; the pool grows quadratically, so d is O(sqrt(n)).
    int d = 2;
    while (2 * (farey_size(d) - 2) + 1 < need) ++d;

    const VectorSet fv = farey_vectors(d);
    VectorSet chain;
    chain.reserve((size_t)need);
    if (need % 2 == 1) chain.push_back({1, 1});
    for (int i = 0; i < need / 2; ++i) {
        const Vec2i s = fv[fv.size() - 2 - (size_t)i];  // nearest the diagonal
        chain.push_back(s);
        chain.push_back({s.y, s.x});
    }
    std::sort(chain.begin(), chain.end(),
              [](Vec2i a, Vec2i b) { return cross(a, b) < 0; });  // slope decreasing

    Drawing out;
    out.kind = CoordKind::exact_int;
    out.label = g.label;
    out.ipos.resize((size_t)n);
    Vec2i p{0, 0};
    out.ipos[0] = p;
    for (int i = 0; i < need; ++i) {
        p = {p.x + chain[(size_t)i].x, p.y + chain[(size_t)i].y};
        out.ipos[(size_t)i + 1] = p;
    }
    out.edges = g.edges();
    out.validate();
    return out;
}

}  // namespace monodraw
