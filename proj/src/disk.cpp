#include "monodraw/disk.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

namespace monodraw {

namespace {

long double round_to(int bits, long double x) {
    return bits == 53 ? (long double)(double)x : x;
}

Vec2r round_to(int bits, Vec2r v) {
    return {round_to(bits, v.x), round_to(bits, v.y)};
}

Vec2r to_r(const Vec2r& v) { return v; }
Vec2r to_r(const Vec2b& v) { return narrow(v); }

// Finite and inside any sane bounding box of the unit disk; catches the
// NaN/overflow fallout of a degenerate normalization in either scalar type.
template <class R>
bool coord_ok(const R& x) {
    if constexpr (std::is_floating_point_v<R>)
        return std::isfinite((double)x);
    else
        return x == x && x > R(-4) && x < R(4);
}

template <class R>
Vec2<R> foot_on_chord(const Vec2<R>& v, const Vec2<R>& p, const Vec2<R>& q, R& s_out) {
    const Vec2<R> u = q - p;
    const R len2 = dot(u, u);
    s_out = len2 > 0 ? R(dot(v - p, u) / len2) : R(-1);
    return {p.x + s_out * u.x, p.y + s_out * u.y};
}

template <class R>
struct SegT {
    Vec2<R> a, b;
};

template <class R>
struct PlacementT {
    Vec2<R> ray_hit, left, right;
    SegT<R> left_seg, right_seg;
    R sl, sr;
};

template <class R>
PlacementT<R> place_children_t(const Vec2<R>& v, const Vec2<R>& ca, const Vec2<R>& cb) {
    using std::sqrt;
    PlacementT<R> out;
    // Perpendicular to the chord pointing away from the center: the chord
    // midpoint is the closest point of the chord line to the origin.
    const Vec2<R> mid{(ca.x + cb.x) / 2, (ca.y + cb.y) / 2};
    const R mlen = sqrt(dot(mid, mid));
    const Vec2<R> w{mid.x / mlen, mid.y / mlen};
    const R vw = dot(v, w);
    const R disc = vw * vw - dot(v, v) + 1;
    const R t = -vw + sqrt(disc);
    out.ray_hit = {v.x + t * w.x, v.y + t * w.y};
    out.left = foot_on_chord(v, ca, out.ray_hit, out.sl);
    out.right = foot_on_chord(v, out.ray_hit, cb, out.sr);
    out.left_seg = {ca, out.ray_hit};
    out.right_seg = {out.ray_hit, cb};
    return out;
}

template <class R, class Round>
void run_disk(const RootedOrderedTree& t, std::vector<Vec2<R>>& pos,
              std::vector<CircularSegment>* segments_out, Round round) {
    using std::sqrt;
    const R h = sqrt(R(3)) / 2;  // circle hit of the chords x = +-1/2
    struct Item {
        int v;
        int depth;
        SegT<R> seg;
    };
    std::vector<Item> stack;
    const int c0 = t.children[t.root][0];
    const int c1 = t.children[t.root][1];
    pos[c0] = {R(-1) / 2, R(0)};
    pos[c1] = {R(1) / 2, R(0)};
    // Chord endpoints ordered so that a -> ray_hit -> b runs clockwise along
    // the segment's arc; the first child takes the chord_a side.
    stack.push_back({c0, 1, {{R(-1) / 2, -h}, {R(-1) / 2, h}}});
    stack.push_back({c1, 1, {{R(1) / 2, h}, {R(1) / 2, -h}}});
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        if (segments_out) (*segments_out)[it.v] = {to_r(it.seg.a), to_r(it.seg.b)};
        if (t.children[it.v].empty()) continue;
        const Vec2<R> v = pos[it.v];
        const PlacementT<R> pl = place_children_t(v, it.seg.a, it.seg.b);
        const Vec2<R> l = round(pl.left);
        const Vec2<R> r = round(pl.right);
        const bool degenerate = !(pl.sl > 0 && pl.sl < 1) || !(pl.sr > 0 && pl.sr < 1) ||
                                l == v || r == v || !coord_ok(pl.ray_hit.x) ||
                                !coord_ok(pl.ray_hit.y);
        if (degenerate)
            throw PrecisionExhausted("draw_disk: chords too narrow at depth " +
                                         std::to_string(it.depth + 1) +
                                         "; increase the precision",
                                     it.depth + 1);
        const int a = t.children[it.v][0];
        const int b = t.children[it.v][1];
        pos[a] = l;
        pos[b] = r;
        stack.push_back({a, it.depth + 1, pl.left_seg});
        stack.push_back({b, it.depth + 1, pl.right_seg});
    }
}

}  // namespace

ChildPlacement place_children(Vec2r v, const CircularSegment& seg) {
    const PlacementT<long double> pl = place_children_t<long double>(v, seg.chord_a, seg.chord_b);
    return {pl.ray_hit,
            pl.left,
            pl.right,
            {pl.left_seg.a, pl.left_seg.b},
            {pl.right_seg.a, pl.right_seg.b}};
}

Drawing draw_disk(const RootedOrderedTree& t, const PrecisionPolicy& policy,
                  std::vector<CircularSegment>* segments_out) {
    if (!is_proper_binary(t))
        throw TreeError("draw_disk: tree must be proper binary "
                        "(root of degree 2, every other vertex of degree 1 or 3)");
    if (policy.bits != 53 && policy.bits != 64 && policy.bits != big_bits)
        throw std::invalid_argument("draw_disk: supported precisions are 53, 64, and " +
                                    std::to_string(big_bits) + " bits");
    const int n = t.n();
    Drawing d;
    d.kind = CoordKind::real;
    d.precision_bits = policy.bits;
    d.root = t.label[t.root];
    d.label = t.label;
    if (segments_out) segments_out->assign(n, CircularSegment{{0, 0}, {0, 0}});
    if (policy.bits <= 64) {
        d.rpos.assign(n, Vec2r{0, 0});
        run_disk<long double>(t, d.rpos, segments_out,
                              [&](const Vec2r& v) { return round_to(policy.bits, v); });
    } else {
        d.bpos.assign(n, Vec2b{});
        run_disk<BigReal>(t, d.bpos, segments_out, [](const Vec2b& v) { return v; });
        d.rpos.resize(n);
        for (int v = 0; v < n; ++v) d.rpos[v] = narrow(d.bpos[v]);
    }
    for (int v = 0; v < n; ++v)
        if (v != t.root) d.edges.push_back({t.parent[v], v});
    for (int v = 0; v < n; ++v) {
        if (v == t.root || !t.children[v].empty()) continue;
        // Rays extend the leaf edges, and their directions are kept at the
        // same precision as the coordinates so the extension stays exact.
        if (d.high_precision()) {
            d.bray_dir.push_back(d.bpos[v] - d.bpos[t.parent[v]]);
            d.rrays.push_back({v, narrow(d.bray_dir.back())});
        } else {
            d.rrays.push_back({v, d.rpos[v] - d.rpos[t.parent[v]]});
        }
    }
    d.validate();
    return d;
}

Drawing project_drawing(const Drawing& binary_drawing, const Binarized& b,
                        const RootedOrderedTree& original) {
    const int n = original.n();
    if ((int)b.map.path_of.size() != n)
        throw TreeError("project_drawing: reduction map does not match the original tree");
    Drawing d;
    d.kind = binary_drawing.kind;
    d.precision_bits = binary_drawing.precision_bits;
    d.root = original.label[original.root];
    d.label = original.label;
    if (d.kind == CoordKind::exact_int)
        d.ipos.resize(n);
    else
        d.rpos.resize(n);
    if (binary_drawing.high_precision()) d.bpos.resize(n);
    for (int v = 0; v < n; ++v) {
        const int bv = b.map.path_of[v][0];
        if (d.kind == CoordKind::exact_int) {
            d.ipos[v] = binary_drawing.ipos[bv];
        } else {
            d.rpos[v] = binary_drawing.rpos[bv];
            if (binary_drawing.high_precision()) d.bpos[v] = binary_drawing.bpos[bv];
        }
    }
    for (int v = 0; v < n; ++v)
        if (v != original.root) d.edges.push_back({original.parent[v], v});
    d.validate();
    return d;
}

Drawing draw_strong(const RootedOrderedTree& t, const PrecisionPolicy& policy) {
    if (t.n() < 2) throw TreeError("draw_strong: need at least two vertices");
    const Binarized b = binarize(t);
    const Drawing dd = draw_disk(b.tree, policy);
    return project_drawing(dd, b, t);
}

}  // namespace monodraw
