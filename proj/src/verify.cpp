#include "monodraw/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

namespace monodraw {

namespace {

// ---------------------------------------------------------------- kernels

struct IntKernel {
    using Pt = Vec2i;
    const Drawing* dr;

    Pt pos(int v) const { return dr->ipos[v]; }
    Vec2r lpos(int v) const { return to_real(dr->ipos[v]); }
    long double bbox_pad() const { return 0.0L; }
    int scross(Pt a, Pt b) const { return sign_cross(a, b); }
    int sdot(Pt a, Pt b) const { return sign_dot(a, b); }
    int scross0(Pt a, Pt b) const { return sign_cross(a, b); }
    int sdot0(Pt a, Pt b) const { return sign_dot(a, b); }
    bool strong_ok(Pt w, Pt dir) const { return dot(w, dir) > 0; }
    long double fmargin(Pt w, Pt dir) const {
        const long double nw = std::sqrt((long double)w.x * w.x + (long double)w.y * w.y);
        const long double nd = std::sqrt((long double)dir.x * dir.x + (long double)dir.y * dir.y);
        return (long double)dot(w, dir) / (nw * nd);
    }
    std::vector<std::pair<int, Pt>> rays() const {
        std::vector<std::pair<int, Pt>> out;
        for (const auto& r : dr->irays) out.push_back({r.leaf, r.dir});
        return out;
    }
};

struct RealKernel {
    using Pt = Vec2r;
    const Drawing* dr;
    long double eps;

    Pt pos(int v) const { return dr->rpos[v]; }
    Vec2r lpos(int v) const { return dr->rpos[v]; }
    long double bbox_pad() const { return 0.0L; }
    int scross(Pt a, Pt b) const { return sign_eps(cross(a, b), norm(a) * norm(b), eps); }
    int sdot(Pt a, Pt b) const { return sign_eps(dot(a, b), norm(a) * norm(b), eps); }
    int scross0(Pt a, Pt b) const { return sgn(cross(a, b)); }
    int sdot0(Pt a, Pt b) const { return sgn(dot(a, b)); }
    bool strong_ok(Pt w, Pt dir) const { return dot(w, dir) > -eps * norm(w) * norm(dir); }
    long double fmargin(Pt w, Pt dir) const { return dot(w, dir) / (norm(w) * norm(dir)); }
    std::vector<std::pair<int, Pt>> rays() const {
        std::vector<std::pair<int, Pt>> out;
        for (const auto& r : dr->rrays) out.push_back({r.leaf, r.dir});
        return out;
    }
};

// Point handle for wide-precision drawings.  Coordinates that are distinct at
// full precision can round to the same long double, so differences are formed
// on the wide values and rounded once; the long double shadow is then within
// 2^-63 relative of the true difference (and long double's exponent range
// keeps even the deepest level's magnitudes representable).  Shadows alone
// settle most sign questions, but the drawings these checks certify contain
// corner angles far below 2^-63, so any sign the shadow cannot call with a
// wide margin is re-evaluated at full width.
struct BigPt {
    std::shared_ptr<const Vec2b> h;  // wide value
    Vec2r l;                         // the same value rounded once
};

BigPt big_value(Vec2b v) {
    BigPt p;
    p.l = narrow(v);
    p.h = std::make_shared<const Vec2b>(std::move(v));
    return p;
}

BigPt operator-(const BigPt& a, const BigPt& b) {
    return big_value({a.h->x - b.h->x, a.h->y - b.h->y});
}
BigPt operator-(const BigPt& a) { return big_value({-a.h->x, -a.h->y}); }

struct BigKernel {
    using Pt = BigPt;
    const Drawing* dr;
    long double eps;  // tolerance for the strong-monotonicity margin only

    // A shadow sign is trusted when the normalized value clears this, which is
    // about six orders of magnitude above the shadow's own rounding noise.
    static constexpr long double esc = 1e-12L;

    // Full-width sign with magnitudes below 2^-4032 of the operand scale
    // treated as zero: genuine features of constructible drawings stay far
    // above that, while anything smaller is arithmetic residue.
    static int wide_sign(const BigReal& v, const Vec2b& a, const Vec2b& b) {
        if (v == 0) return 0;
        static const BigReal band = boost::multiprecision::ldexp(BigReal(1), 2 * 4032);
        const BigReal s2 = (a.x * a.x + a.y * a.y) * (b.x * b.x + b.y * b.y);
        if (v * v * band <= s2) return 0;
        return v > 0 ? 1 : -1;
    }
    int xsign(const Pt& a, const Pt& b) const {
        const long double c = cross(a.l, b.l);
        if (std::fabs(c) > esc * (norm(a.l) * norm(b.l))) return c > 0 ? 1 : -1;
        return wide_sign(cross(*a.h, *b.h), *a.h, *b.h);
    }
    int dsign(const Pt& a, const Pt& b) const {
        const long double c = dot(a.l, b.l);
        if (std::fabs(c) > esc * (norm(a.l) * norm(b.l))) return c > 0 ? 1 : -1;
        return wide_sign(dot(*a.h, *b.h), *a.h, *b.h);
    }

    Pt pos(int v) const {
        // Non-owning handle into the drawing's own storage.
        return {std::shared_ptr<const Vec2b>(std::shared_ptr<const Vec2b>(), &dr->bpos[v]),
                dr->rpos[v]};
    }
    Vec2r lpos(int v) const { return dr->rpos[v]; }
    // Shadow boxes sit within 2^-63 relative of the true ones; padding by
    // 1e-15 of the coordinate scale keeps the box prefilter conservative.
    long double bbox_pad() const {
        long double mx = 1.0L;
        for (const Vec2r& p : dr->rpos) mx = std::max({mx, std::fabs(p.x), std::fabs(p.y)});
        return 1e-15L * mx;
    }
    int scross(const Pt& a, const Pt& b) const { return xsign(a, b); }
    int sdot(const Pt& a, const Pt& b) const { return dsign(a, b); }
    int scross0(const Pt& a, const Pt& b) const { return xsign(a, b); }
    int sdot0(const Pt& a, const Pt& b) const { return dsign(a, b); }
    bool strong_ok(const Pt& w, const Pt& dir) const {
        return dot(w.l, dir.l) > -eps * norm(w.l) * norm(dir.l);
    }
    long double fmargin(const Pt& w, const Pt& dir) const {
        return dot(w.l, dir.l) / (norm(w.l) * norm(dir.l));
    }
    std::vector<std::pair<int, Pt>> rays() const {
        std::vector<std::pair<int, Pt>> out;
        for (size_t i = 0; i < dr->rrays.size(); ++i)
            out.push_back({dr->rrays[i].leaf,
                           {std::shared_ptr<const Vec2b>(std::shared_ptr<const Vec2b>(),
                                                         &dr->bray_dir[i]),
                            dr->rrays[i].dir}});
        return out;
    }
};

template <class F>
auto with_kernel(const Drawing& d, const VerifyOptions& opt, F&& f) {
    if (d.kind == CoordKind::exact_int) {
        IntKernel k{&d};
        return f(k);
    }
    if (d.high_precision()) {
        BigKernel k{&d, opt.eps};
        return f(k);
    }
    RealKernel k{&d, opt.eps};
    return f(k);
}

// ---------------------------------------------------------------- graph plumbing

struct Adjacency {
    std::vector<std::vector<int>> nbr;
    std::vector<std::vector<int>> eid;  // edge index behind each nbr entry
};

Adjacency build_adj(const Drawing& d) {
    Adjacency a;
    a.nbr.resize(d.n());
    a.eid.resize(d.n());
    for (int i = 0; i < d.m(); ++i) {
        const auto& e = d.edges[i];
        a.nbr[e[0]].push_back(e[1]);
        a.eid[e[0]].push_back(i);
        a.nbr[e[1]].push_back(e[0]);
        a.eid[e[1]].push_back(i);
    }
    return a;
}

// Both orientations of every edge vector, formed once up front: the monotone
// and strong checks walk paths millions of times and must not repeat the
// (possibly wide-precision) subtraction per step.
template <class K>
std::pair<std::vector<typename K::Pt>, std::vector<typename K::Pt>> edge_vectors(
    const K& k, const Drawing& d) {
    std::vector<typename K::Pt> fw, rv;
    fw.reserve(d.m());
    rv.reserve(d.m());
    for (const auto& e : d.edges) {
        fw.push_back(k.pos(e[1]) - k.pos(e[0]));
        rv.push_back(-fw.back());
    }
    return {std::move(fw), std::move(rv)};
}

struct RootedTree {
    int root = 0;
    bool is_tree = false;
    bool connected = false;
    std::vector<int> parent, depth, order;
};

RootedTree root_tree(const Drawing& d, const Adjacency& adj) {
    RootedTree t;
    const int n = d.n();
    if (n == 0) {
        t.is_tree = t.connected = true;
        return t;
    }
    t.root = d.root ? d.index_of(*d.root) : 0;
    t.parent.assign(n, -2);
    t.depth.assign(n, 0);
    t.order.reserve(n);
    t.order.push_back(t.root);
    t.parent[t.root] = -1;
    for (size_t h = 0; h < t.order.size(); ++h) {
        const int v = t.order[h];
        for (int u : adj.nbr[v]) {
            if (t.parent[u] != -2) continue;
            t.parent[u] = v;
            t.depth[u] = t.depth[v] + 1;
            t.order.push_back(u);
        }
    }
    t.connected = (int)t.order.size() == n;
    t.is_tree = t.connected && d.m() == n - 1;
    return t;
}

std::vector<int> path_between(const RootedTree& rt, int u, int v) {
    std::vector<int> up, down;
    int x = u, y = v;
    while (rt.depth[x] > rt.depth[y]) {
        up.push_back(x);
        x = rt.parent[x];
    }
    while (rt.depth[y] > rt.depth[x]) {
        down.push_back(y);
        y = rt.parent[y];
    }
    while (x != y) {
        up.push_back(x);
        x = rt.parent[x];
        down.push_back(y);
        y = rt.parent[y];
    }
    up.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

// ---------------------------------------------------------------- intersection predicates

template <class K, class Pt = typename K::Pt>
bool on_segment(const K& k, Pt p, Pt a, Pt b) {
    return k.scross(b - a, p - a) == 0 && k.sdot(a - p, b - p) <= 0;
}

template <class K, class Pt = typename K::Pt>
bool seg_seg_hit(const K& k, Pt a, Pt b, Pt c, Pt d) {
    const int d1 = k.scross(d - c, a - c);
    const int d2 = k.scross(d - c, b - c);
    const int d3 = k.scross(b - a, c - a);
    const int d4 = k.scross(b - a, d - a);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && on_segment(k, a, c, d)) return true;
    if (d2 == 0 && on_segment(k, b, c, d)) return true;
    if (d3 == 0 && on_segment(k, c, a, b)) return true;
    if (d4 == 0 && on_segment(k, d, a, b)) return true;
    return false;
}

// Ray p + t*w, t >= 0, against closed segment ab.
template <class K, class Pt = typename K::Pt>
bool seg_ray_hit(const K& k, Pt a, Pt b, Pt p, Pt w) {
    const int sa = k.scross(w, a - p);
    const int sb = k.scross(w, b - p);
    if (sa == 0 && sb == 0) return k.sdot(w, a - p) >= 0 || k.sdot(w, b - p) >= 0;
    if (sa == 0) return k.sdot(w, a - p) >= 0;
    if (sb == 0) return k.sdot(w, b - p) >= 0;
    if (sa * sb > 0) return false;
    // Segment straddles the supporting line; hit iff the crossing parameter
    // along the ray is nonnegative.
    const int num = k.scross0(b - a, a - p);
    const int den = k.scross0(b - a, w);
    return num * den >= 0;
}

template <class K, class Pt = typename K::Pt>
bool ray_ray_hit(const K& k, Pt p, Pt w, Pt q, Pt u) {
    if (k.scross(w, u) == 0) {
        if (k.scross(w, q - p) != 0) return false;
        if (k.sdot(w, u) > 0) return true;  // same direction on one line
        return k.sdot(w, q - p) >= 0;       // facing each other
    }
    const int den = k.scross0(w, u);
    const int t_num = k.scross0(q - p, u);
    const int s_num = k.scross0(q - p, w);
    return t_num * den >= 0 && s_num * den >= 0;
}

// Two straight pieces leaving the same point overlap iff they leave in
// exactly the same direction.
template <class K, class Pt = typename K::Pt>
bool shared_point_overlap(const K& k, Pt da, Pt db) {
    return k.scross(da, db) == 0 && k.sdot(da, db) > 0;
}

// ---------------------------------------------------------------- crossing check

template <class K>
CheckReport crossing_impl(const K& k, const Drawing& d, const VerifyOptions& opt) {
    CheckReport rep;
    rep.check = "crossing";
    const int m = d.m();
    std::vector<std::array<long double, 4>> bb(m);
    const long double pad = k.bbox_pad();
    for (int i = 0; i < m; ++i) {
        const Vec2r a = k.lpos(d.edges[i][0]);
        const Vec2r b = k.lpos(d.edges[i][1]);
        bb[i] = {std::min(a.x, b.x) - pad, std::min(a.y, b.y) - pad, std::max(a.x, b.x) + pad,
                 std::max(a.y, b.y) + pad};
    }
    auto fail = [&](const std::string& what, std::array<std::string, 2> w1,
                    std::array<std::string, 2> w2) {
        rep.pass = false;
        rep.detail = what;
        rep.witness_edges = {w1, w2};
    };
    auto edge_name = [&](int i) -> std::array<std::string, 2> {
        return {d.label[d.edges[i][0]], d.label[d.edges[i][1]]};
    };
    for (int i = 0; i < m && rep.pass; ++i) {
        const int u1 = d.edges[i][0], v1 = d.edges[i][1];
        for (int j = i + 1; j < m; ++j) {
            if (bb[i][2] < bb[j][0] || bb[j][2] < bb[i][0] || bb[i][3] < bb[j][1] ||
                bb[j][3] < bb[i][1])
                continue;
            const int u2 = d.edges[j][0], v2 = d.edges[j][1];
            int s = -1, x = -1, y = -1;  // shared vertex and the far endpoints
            if (u1 == u2) s = u1, x = v1, y = v2;
            else if (u1 == v2) s = u1, x = v1, y = u2;
            else if (v1 == u2) s = v1, x = u1, y = v2;
            else if (v1 == v2) s = v1, x = u1, y = u2;
            if (s >= 0) {
                if (shared_point_overlap(k, k.pos(x) - k.pos(s), k.pos(y) - k.pos(s))) {
                    fail("edges overlap beyond their shared vertex '" + d.label[s] + "'",
                         edge_name(i), edge_name(j));
                    break;
                }
            } else if (seg_seg_hit(k, k.pos(u1), k.pos(v1), k.pos(u2), k.pos(v2))) {
                fail("edges intersect", edge_name(i), edge_name(j));
                break;
            }
        }
    }
    const auto rays = opt.with_rays ? k.rays() : decltype(k.rays()){};
    for (size_t r = 0; r < rays.size() && rep.pass; ++r) {
        const int leaf = rays[r].first;
        const auto p = k.pos(leaf);
        const auto w = rays[r].second;
        for (int i = 0; i < m; ++i) {
            const int u = d.edges[i][0], v = d.edges[i][1];
            if (u == leaf || v == leaf) {
                const int far = u == leaf ? v : u;
                if (shared_point_overlap(k, w, k.pos(far) - p)) {
                    fail("ray at '" + d.label[leaf] + "' runs back along an incident edge",
                         {d.label[leaf], "ray"}, edge_name(i));
                    break;
                }
            } else if (seg_ray_hit(k, k.pos(u), k.pos(v), p, w)) {
                fail("ray at '" + d.label[leaf] + "' hits an edge", {d.label[leaf], "ray"},
                     edge_name(i));
                break;
            }
        }
        for (size_t r2 = r + 1; r2 < rays.size() && rep.pass; ++r2) {
            const int leaf2 = rays[r2].first;
            if (leaf2 == leaf) {
                if (shared_point_overlap(k, w, rays[r2].second)) {
                    fail("two rays at '" + d.label[leaf] + "' coincide", {d.label[leaf], "ray"},
                         {d.label[leaf2], "ray"});
                }
            } else if (ray_ray_hit(k, p, w, k.pos(leaf2), rays[r2].second)) {
                fail("rays at '" + d.label[leaf] + "' and '" + d.label[leaf2] + "' intersect",
                     {d.label[leaf], "ray"}, {d.label[leaf2], "ray"});
            }
        }
    }
    if (rep.pass)
        rep.detail = std::to_string(m) + " edges and " + std::to_string(rays.size()) +
                     " rays are pairwise disjoint away from shared vertices";
    return rep;
}

// ---------------------------------------------------------------- monotone check

template <class Pt>
struct MonoState {
    Pt vlo{}, vhi{};
    bool has = false;
    bool failed = false;
};

// Smallest enclosing angular cone of the path's edge directions, kept only
// while its width stays below a half turn; wider sets have no open
// half-plane and stay failed along every extension.
template <class K, class Pt = typename K::Pt>
MonoState<Pt> mono_extend(const K& k, MonoState<Pt> st, Pt w) {
    if (!st.has) return {w, w, true, false};
    if (st.failed) return st;
    const int clw = k.scross(st.vlo, w);
    const int cwh = k.scross(w, st.vhi);
    const bool in_lo = clw > 0 || (clw == 0 && k.sdot(st.vlo, w) > 0);
    const bool in_hi = cwh > 0 || (cwh == 0 && k.sdot(w, st.vhi) > 0);
    if (in_lo && in_hi) return st;
    if (k.scross(st.vhi, w) > 0 && clw > 0) {
        st.vhi = w;
        return st;
    }
    if (k.scross(w, st.vlo) > 0 && cwh > 0) {
        st.vlo = w;
        return st;
    }
    st.failed = true;
    return st;
}

template <class K>
CheckReport monotone_impl(const K& k, const Drawing& d, const Adjacency& adj) {
    CheckReport rep;
    rep.check = "monotone";
    const int n = d.n();
    const auto [fw, rv] = edge_vectors(k, d);
    long long pairs = 0;
    struct Frame {
        int v, parent;
        size_t idx;
    };
    std::vector<Frame> frames;
    std::vector<MonoState<typename K::Pt>> saved;
    for (int s = 0; s < n; ++s) {
        frames.assign(1, {s, -1, 0});
        saved.clear();
        MonoState<typename K::Pt> st;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.idx < adj.nbr[f.v].size()) {
                const size_t slot = f.idx++;
                const int u = adj.nbr[f.v][slot];
                if (u == f.parent) continue;
                const int from = f.v;
                const int e = adj.eid[f.v][slot];
                saved.push_back(st);
                st = mono_extend(k, st, d.edges[e][0] == from ? fw[e] : rv[e]);
                if (st.failed) {
                    rep.pass = false;
                    rep.detail = "path '" + d.label[s] + "' -> '" + d.label[u] +
                                 "': edge directions do not fit in an open half-plane";
                    rep.witness_vertices = {d.label[s], d.label[u]};
                    rep.witness_edges = {{d.label[from], d.label[u]}};
                    return rep;
                }
                ++pairs;
                frames.push_back({u, from, 0});
            } else {
                frames.pop_back();
                if (!saved.empty()) {
                    st = saved.back();
                    saved.pop_back();
                }
            }
        }
    }
    rep.detail = "all " + std::to_string(pairs) + " ordered vertex pairs have a monotone path";
    return rep;
}

// ---------------------------------------------------------------- strong monotonicity

template <class K>
CheckReport strong_tree_impl(const K& k, const Drawing& d, const Adjacency& adj) {
    CheckReport rep;
    rep.check = "strong";
    const int n = d.n();
    const auto [fw, rv] = edge_vectors(k, d);
    using Pt = typename K::Pt;
    std::vector<int> parent(n), order;
    std::vector<const Pt*> up(n, nullptr);  // vector from parent[x] to x
    order.reserve(n);
    long double min_margin = 2.0L;
    long long pairs = 0;
    for (int a = 0; a < n; ++a) {
        parent.assign(n, -2);
        order.clear();
        order.push_back(a);
        parent[a] = -1;
        for (size_t h = 0; h < order.size(); ++h) {
            const int v = order[h];
            for (size_t i = 0; i < adj.nbr[v].size(); ++i) {
                const int u = adj.nbr[v][i];
                if (parent[u] != -2) continue;
                parent[u] = v;
                const int e = adj.eid[v][i];
                up[u] = d.edges[e][0] == v ? &fw[e] : &rv[e];
                order.push_back(u);
            }
        }
        for (int b : order) {
            if (b == a) continue;
            const Pt dir = k.pos(b) - k.pos(a);
            ++pairs;
            for (int x = b; x != a;) {
                const int p = parent[x];
                const Pt& w = *up[x];
                if (!k.strong_ok(w, dir)) {
                    rep.pass = false;
                    rep.detail = "pair '" + d.label[a] + "' -> '" + d.label[b] +
                                 "': path edge points away from the target direction";
                    rep.witness_vertices = {d.label[a], d.label[b]};
                    rep.witness_edges = {{d.label[p], d.label[x]}};
                    rep.measured = (double)k.fmargin(w, dir);
                    return rep;
                }
                min_margin = std::min(min_margin, k.fmargin(w, dir));
                x = p;
            }
        }
    }
    rep.detail = "all " + std::to_string(pairs) + " ordered pairs are strongly monotone";
    if (pairs > 0) rep.measured = (double)min_margin;
    return rep;
}

template <class K>
CheckReport strong_graph_impl(const K& k, const Drawing& d, const Adjacency& adj) {
    CheckReport rep;
    rep.check = "strong";
    const int n = d.n();
    std::vector<int> visited(n, -1), stack;
    long long pairs = 0;
    int epoch = 0;
    for (int a = 0; a < n && rep.pass; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            const auto dir = k.pos(b) - k.pos(a);
            ++pairs;
            ++epoch;
            stack.assign(1, a);
            visited[a] = epoch;
            bool found = false;
            while (!stack.empty() && !found) {
                const int u = stack.back();
                stack.pop_back();
                for (int v : adj.nbr[u]) {
                    if (visited[v] == epoch) continue;
                    if (!k.strong_ok(k.pos(v) - k.pos(u), dir)) continue;
                    if (v == b) {
                        found = true;
                        break;
                    }
                    visited[v] = epoch;
                    stack.push_back(v);
                }
            }
            if (!found) {
                rep.pass = false;
                rep.detail = "pair '" + d.label[a] + "' -> '" + d.label[b] +
                             "': no path uses only edges advancing toward the target";
                rep.witness_vertices = {d.label[a], d.label[b]};
                break;
            }
        }
    }
    if (rep.pass)
        rep.detail = "all " + std::to_string(pairs) +
                     " ordered pairs reachable along direction-advancing edges";
    return rep;
}

// ---------------------------------------------------------------- convex faces

template <class Pt>
int half0(Pt v) {
    return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
}

int half0(const BigPt& v) { return half0(v.l); }

// Counterclockwise rank of w measured from base: 0 at base's own direction,
// then (0,pi), pi, (pi,2pi).
template <class K, class Pt = typename K::Pt>
int ccw_rank(const K& k, Pt base, Pt w) {
    const int c = k.scross0(base, w);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return k.sdot0(base, w) > 0 ? 0 : 2;
}

template <class K>
struct FaceContext {
    std::vector<int> leaves;                       // circular order
    std::vector<typename K::Pt> ray_dir;           // per vertex; leaves only
    std::vector<char> has_ray;
};

template <class K>
FaceContext<K> build_faces(const K& k, const Drawing& d, const Adjacency& adj,
                           const RootedTree& rt) {
    using Pt = typename K::Pt;
    FaceContext<K> fc;
    const int n = d.n();
    fc.ray_dir.resize(n);
    fc.has_ray.assign(n, 0);
    for (const auto& [leaf, dir] : k.rays()) {
        if (adj.nbr[leaf].size() > 1)
            throw VerifyError("convexity check: ray attached to the non-leaf vertex '" +
                              d.label[leaf] + "'");
        if (fc.has_ray[leaf])
            throw VerifyError("convexity check: two rays at '" + d.label[leaf] + "'");
        fc.has_ray[leaf] = 1;
        fc.ray_dir[leaf] = dir;
    }
    for (int v = 0; v < n; ++v) {
        if (adj.nbr[v].size() <= 1 && !fc.has_ray[v])
            throw VerifyError("convexity check: leaf '" + d.label[v] +
                              "' has no ray; faces are undefined");
    }
    // Depth-first traversal with children in geometric rotation order.
    struct Frame {
        int v;
        std::vector<int> kids;
        size_t idx;
    };
    auto kids_of = [&](int v, int parent) {
        std::vector<int> kids;
        for (int u : adj.nbr[v])
            if (u != parent) kids.push_back(u);
        if (parent < 0) {
            std::sort(kids.begin(), kids.end(), [&](int a, int b) {
                const Pt da = k.pos(a) - k.pos(v), db = k.pos(b) - k.pos(v);
                const int ha = half0(da), hb = half0(db);
                if (ha != hb) return ha < hb;
                return k.scross0(da, db) > 0;
            });
        } else {
            const Pt base = k.pos(parent) - k.pos(v);
            std::sort(kids.begin(), kids.end(), [&](int a, int b) {
                const Pt da = k.pos(a) - k.pos(v), db = k.pos(b) - k.pos(v);
                const int ra = ccw_rank(k, base, da), rb = ccw_rank(k, base, db);
                if (ra != rb) return ra < rb;
                return k.scross0(da, db) > 0;
            });
        }
        return kids;
    };
    std::vector<Frame> stack;
    stack.push_back({rt.root, kids_of(rt.root, -1), 0});
    if (stack.back().kids.empty() && n > 1)
        throw VerifyError("convexity check: disconnected drawing");
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.idx < f.kids.size()) {
            const int u = f.kids[f.idx++];
            auto kids = kids_of(u, f.v);
            if (kids.empty()) {
                fc.leaves.push_back(u);
            } else {
                stack.push_back({u, std::move(kids), 0});
            }
        } else {
            stack.pop_back();
        }
    }
    if (adj.nbr[rt.root].size() == 1) fc.leaves.push_back(rt.root);
    return fc;
}

template <class K>
CheckReport convex_impl(const K& k, const Drawing& d, const Adjacency& adj,
                        const RootedTree& rt, bool strict, const VerifyOptions& opt) {
    using Pt = typename K::Pt;
    CheckReport rep;
    rep.check = strict ? "strict-convex" : "convex";
    if (d.n() <= 1) {
        rep.detail = "trivial drawing";
        return rep;
    }
    const auto fc = build_faces(k, d, adj, rt);
    const int L = (int)fc.leaves.size();
    for (int i = 0; i < L; ++i) {
        const int u = fc.leaves[i];
        const int v = fc.leaves[(i + 1) % L];
        if (u == v) continue;
        const auto path = path_between(rt, u, v);
        const int len = (int)path.size();
        for (int j = 0; j < len; ++j) {
            const int x = path[j];
            const Pt din = j == 0 ? -fc.ray_dir[u] : k.pos(x) - k.pos(path[j - 1]);
            const Pt dout = j == len - 1 ? fc.ray_dir[v] : k.pos(path[j + 1]) - k.pos(x);
            const int c = k.scross(din, dout);
            bool bad = false;
            std::string why;
            if (c > 0) {
                bad = true;
                why = "reflex corner";
            } else if (c == 0) {
                if (k.sdot(din, dout) < 0) {
                    bad = true;
                    why = "boundary folds back";
                } else if (strict) {
                    const bool end_leaf = (j == 0 || j == len - 1);
                    if (!end_leaf && adj.nbr[x].size() != 2) {
                        bad = true;
                        why = "straight angle at a branching vertex";
                    }
                }
            }
            if (bad) {
                rep.pass = false;
                rep.detail = why + " at '" + d.label[x] + "' on the face between leaves '" +
                             d.label[u] + "' and '" + d.label[v] + "'";
                rep.witness_vertices = {d.label[u], d.label[v], d.label[x]};
                return rep;
            }
        }
        if (ray_ray_hit(k, k.pos(u), fc.ray_dir[u], k.pos(v), fc.ray_dir[v])) {
            rep.pass = false;
            rep.detail = "bounding rays of the face between leaves '" + d.label[u] + "' and '" +
                         d.label[v] + "' converge";
            rep.witness_vertices = {d.label[u], d.label[v]};
            return rep;
        }
    }
    CheckReport crossing = crossing_impl(k, d, opt);
    if (!crossing.pass) {
        crossing.check = rep.check;
        crossing.detail = "not crossing-free: " + crossing.detail;
        return crossing;
    }
    rep.detail = std::to_string(L) + " faces, all corners " +
                 (strict ? "strictly convex" : "convex") + ", all face rays diverge";
    return rep;
}

// Non-tree drawings: all vertices in (strictly) convex position.
template <class K>
CheckReport convex_position_impl(const K& k, const Drawing& d, bool strict) {
    using Pt = typename K::Pt;
    CheckReport rep;
    rep.check = strict ? "strict-convex" : "convex";
    const int n = d.n();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Vec2r pa = k.lpos(a), pb = k.lpos(b);
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });
    for (int i = 0; i + 1 < n; ++i) {
        const Vec2r a = k.lpos(idx[i]), b = k.lpos(idx[i + 1]);
        if (a.x == b.x && a.y == b.y) {
            rep.pass = false;
            rep.detail = "vertices '" + d.label[idx[i]] + "' and '" + d.label[idx[i + 1]] +
                         "' coincide";
            rep.witness_vertices = {d.label[idx[i]], d.label[idx[i + 1]]};
            return rep;
        }
    }
    if (n < 3) {
        rep.detail = "fewer than three vertices";
        return rep;
    }
    // Monotone-chain hull keeping only strict turns.
    std::vector<int> hull;
    auto build = [&](auto begin, auto end) {
        const size_t floor = hull.size();
        for (auto it = begin; it != end; ++it) {
            const int p = *it;
            while (hull.size() >= floor + 2) {
                const Pt a = k.pos(hull[hull.size() - 2]);
                const Pt b = k.pos(hull[hull.size() - 1]);
                if (k.scross0(b - a, k.pos(p) - a) > 0) break;
                hull.pop_back();
            }
            hull.push_back(p);
        }
        hull.pop_back();
    };
    build(idx.begin(), idx.end());
    build(idx.rbegin(), idx.rend());
    std::vector<char> on_hull(n, 0);
    for (int v : hull) on_hull[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (on_hull[v]) continue;
        bool boundary = false;
        if (!strict) {
            for (size_t i = 0; i < hull.size() && !boundary; ++i) {
                const Pt a = k.pos(hull[i]), b = k.pos(hull[(i + 1) % hull.size()]);
                boundary = on_segment(k, k.pos(v), a, b);
            }
        }
        if (!boundary) {
            rep.pass = false;
            rep.detail = "vertex '" + d.label[v] + "' is not " +
                         (strict ? "a corner of" : "on") + " the convex hull";
            rep.witness_vertices = {d.label[v]};
            return rep;
        }
    }
    rep.detail = "all " + std::to_string(n) + " vertices in " +
                 (strict ? "strictly convex" : "convex") + " position";
    return rep;
}

// ---------------------------------------------------------------- angular resolution

CheckReport resolution_int(const Drawing& d, std::optional<double> min_radians) {
    CheckReport rep;
    rep.check = "resolution";
    std::vector<std::vector<std::pair<Vec2i, int>>> at(d.n());
    for (int e = 0; e < d.m(); ++e) {
        const int u = d.edges[e][0], v = d.edges[e][1];
        at[u].push_back({d.ipos[v] - d.ipos[u], e});
        at[v].push_back({d.ipos[u] - d.ipos[v], e});
    }
    bool any = false;
    AngleMag best{0, 0};
    int best_v = -1, best_e1 = -1, best_e2 = -1;
    for (int v = 0; v < d.n(); ++v) {
        auto& dirs = at[v];
        if (dirs.size() < 2) continue;
        std::sort(dirs.begin(), dirs.end(),
                  [](const auto& a, const auto& b) { return dir_less(a.first, b.first); });
        for (size_t i = 0; i < dirs.size(); ++i) {
            const size_t j = (i + 1) % dirs.size();
            const AngleMag am = angle_mag(dirs[i].first, dirs[j].first);
            if (!any || angle_mag_less(am, best)) {
                any = true;
                best = am;
                best_v = v;
                best_e1 = dirs[i].second;
                best_e2 = dirs[j].second;
            }
        }
    }
    if (!any) {
        rep.detail = "no vertex has two incident edges";
        return rep;
    }
    const double r = angle_mag_radians(best);
    rep.measured = r;
    rep.witness_vertices = {d.label[best_v]};
    rep.witness_edges = {{d.label[d.edges[best_e1][0]], d.label[d.edges[best_e1][1]]},
                         {d.label[d.edges[best_e2][0]], d.label[d.edges[best_e2][1]]}};
    rep.detail = "minimum angle " + std::to_string(r) + " rad (" +
                 std::to_string(r * 180.0 / std::numbers::pi) + " deg) at '" + d.label[best_v] +
                 "'";
    if (min_radians && r < *min_radians) {
        rep.pass = false;
        rep.detail += ", below the required " + std::to_string(*min_radians) + " rad";
    }
    return rep;
}

CheckReport resolution_real(const Drawing& d, std::optional<double> min_radians) {
    CheckReport rep;
    rep.check = "resolution";
    // Edge vectors come from one wide subtraction when wide coordinates are
    // present; the angles themselves are macroscopic either way.
    auto evec = [&](int u, int v) -> Vec2r {
        return d.high_precision() ? narrow(d.bpos[v] - d.bpos[u]) : d.rpos[v] - d.rpos[u];
    };
    std::vector<std::vector<std::pair<Vec2r, int>>> at(d.n());
    for (int e = 0; e < d.m(); ++e) {
        const int u = d.edges[e][0], v = d.edges[e][1];
        at[u].push_back({evec(u, v), e});
        at[v].push_back({evec(v, u), e});
    }
    // Tiny angles between nearly parallel edges cancel in the shadow cross
    // product, so those measurements are redone at full width.
    auto pair_angle = [&](int v, const std::pair<Vec2r, int>& A, const std::pair<Vec2r, int>& B) {
        const long double c = cross(A.first, B.first), t = dot(A.first, B.first);
        if (d.high_precision() && std::fabs(c) <= 1e-12L * norm(A.first) * norm(B.first)) {
            auto other = [&](int e) { return d.edges[e][0] == v ? d.edges[e][1] : d.edges[e][0]; };
            const Vec2b wa = d.bpos[other(A.second)] - d.bpos[v];
            const Vec2b wb = d.bpos[other(B.second)] - d.bpos[v];
            const BigReal cb = cross(wa, wb);
            const BigReal n2 = (wa.x * wa.x + wa.y * wa.y) * (wb.x * wb.x + wb.y * wb.y);
            const long double mag =
                std::min(1.0L, std::sqrt(std::max(0.0L, narrow(cb * cb / n2))));
            return dot(wa, wb) >= 0 ? std::asin(mag)
                                    : std::numbers::pi_v<long double> - std::asin(mag);
        }
        return std::fabs(std::atan2(c, t));
    };
    bool any = false;
    long double best = 0;
    int best_v = -1, best_e1 = -1, best_e2 = -1;
    for (int v = 0; v < d.n(); ++v) {
        auto& dirs = at[v];
        if (dirs.size() < 2) continue;
        std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) {
            const int ha = half0(a.first), hb = half0(b.first);
            if (ha != hb) return ha < hb;
            return sgn(cross(a.first, b.first)) > 0;
        });
        for (size_t i = 0; i < dirs.size(); ++i) {
            const size_t j = (i + 1) % dirs.size();
            const long double ang = pair_angle(v, dirs[i], dirs[j]);
            if (!any || ang < best) {
                any = true;
                best = ang;
                best_v = v;
                best_e1 = dirs[i].second;
                best_e2 = dirs[j].second;
            }
        }
    }
    if (!any) {
        rep.detail = "no vertex has two incident edges";
        return rep;
    }
    rep.measured = (double)best;
    rep.witness_vertices = {d.label[best_v]};
    rep.witness_edges = {{d.label[d.edges[best_e1][0]], d.label[d.edges[best_e1][1]]},
                         {d.label[d.edges[best_e2][0]], d.label[d.edges[best_e2][1]]}};
    rep.detail = "minimum angle " + std::to_string((double)best) + " rad at '" + d.label[best_v] +
                 "'";
    if (min_radians && (double)best < *min_radians) {
        rep.pass = false;
        rep.detail += ", below the required " + std::to_string(*min_radians) + " rad";
    }
    return rep;
}

}  // namespace

// ---------------------------------------------------------------- public entry points

CheckReport check_crossing_free(const Drawing& d, const VerifyOptions& opt) {
    d.validate();
    return with_kernel(d, opt, [&](const auto& k) { return crossing_impl(k, d, opt); });
}

CheckReport check_monotone(const Drawing& d, const VerifyOptions& opt) {
    d.validate();
    const auto adj = build_adj(d);
    const auto rt = root_tree(d, adj);
    if (!rt.is_tree)
        throw VerifyError("the monotonicity check handles tree drawings only");
    return with_kernel(d, opt, [&](const auto& k) { return monotone_impl(k, d, adj); });
}

CheckReport check_strong_monotone(const Drawing& d, const VerifyOptions& opt) {
    d.validate();
    const auto adj = build_adj(d);
    const auto rt = root_tree(d, adj);
    if (!rt.connected)
        throw VerifyError("the strong-monotonicity check requires a connected drawing");
    return with_kernel(d, opt, [&](const auto& k) {
        return rt.is_tree ? strong_tree_impl(k, d, adj) : strong_graph_impl(k, d, adj);
    });
}

CheckReport check_convex(const Drawing& d, const VerifyOptions& opt) {
    d.validate();
    const auto adj = build_adj(d);
    const auto rt = root_tree(d, adj);
    if (!rt.is_tree) {
        if (d.high_precision())
            throw VerifyError("convex-position checks support wide-precision tree drawings only");
        return with_kernel(d, opt,
                           [&](const auto& k) { return convex_position_impl(k, d, false); });
    }
    return with_kernel(d, opt,
                       [&](const auto& k) { return convex_impl(k, d, adj, rt, false, opt); });
}

CheckReport check_strictly_convex(const Drawing& d, const VerifyOptions& opt) {
    d.validate();
    const auto adj = build_adj(d);
    const auto rt = root_tree(d, adj);
    if (!rt.is_tree) {
        if (d.high_precision())
            throw VerifyError("convex-position checks support wide-precision tree drawings only");
        return with_kernel(d, opt,
                           [&](const auto& k) { return convex_position_impl(k, d, true); });
    }
    return with_kernel(d, opt,
                       [&](const auto& k) { return convex_impl(k, d, adj, rt, true, opt); });
}

CheckReport check_resolution(const Drawing& d, std::optional<double> min_radians,
                             const VerifyOptions& opt) {
    d.validate();
    (void)opt;
    return d.kind == CoordKind::exact_int ? resolution_int(d, min_radians)
                                          : resolution_real(d, min_radians);
}

bool monotone_pair(const Drawing& d, int a, int b, const VerifyOptions& opt) {
    const auto adj = build_adj(d);
    const auto rt = root_tree(d, adj);
    if (!rt.is_tree)
        throw VerifyError("the monotonicity check handles tree drawings only");
    if (a == b) return true;
    const auto path = path_between(rt, a, b);
    return with_kernel(d, opt, [&](const auto& k) {
        MonoState<typename std::decay_t<decltype(k)>::Pt> st;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            st = mono_extend(k, st, k.pos(path[i + 1]) - k.pos(path[i]));
        return !st.failed;
    });
}

bool strong_monotone_pair(const Drawing& d, int a, int b, const VerifyOptions& opt) {
    const auto adj = build_adj(d);
    const auto rt = root_tree(d, adj);
    if (!rt.connected)
        throw VerifyError("the strong-monotonicity check requires a connected drawing");
    if (a == b) return true;
    return with_kernel(d, opt, [&](const auto& k) {
        const auto dir = k.pos(b) - k.pos(a);
        if (rt.is_tree) {
            const auto path = path_between(rt, a, b);
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (!k.strong_ok(k.pos(path[i + 1]) - k.pos(path[i]), dir)) return false;
            return true;
        }
        std::vector<char> visited(d.n(), 0);
        std::vector<int> stack{a};
        visited[a] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj.nbr[u]) {
                if (visited[v] || !k.strong_ok(k.pos(v) - k.pos(u), dir)) continue;
                if (v == b) return true;
                visited[v] = 1;
                stack.push_back(v);
            }
        }
        return false;
    });
}

bool path_monotone_wrt(const std::vector<Vec2i>& path_edges, Vec2i dir) {
    for (const Vec2i& w : path_edges)
        if (dot(w, dir) <= 0) return false;
    return true;
}

bool path_monotone_wrt(const std::vector<Vec2r>& path_edges, Vec2r dir, long double eps) {
    for (const Vec2r& w : path_edges)
        if (dot(w, dir) <= -eps * norm(w) * norm(dir)) return false;
    return true;
}

bool oracle_monotone_pair(const std::vector<Vec2i>& path_edges) {
    if (path_edges.empty()) throw VerifyError("oracle: empty path");
    auto all_forward_small = [&](i64 dx, i64 dy) {
        for (const Vec2i& w : path_edges) {
            const i128 s = (i128)dx * w.x + (i128)dy * w.y;
            if (s <= 0) return false;
        }
        return true;
    };
    for (int i = 0; i < 4096; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 4096.0;
        const i64 dx = std::llround(1e6 * std::cos(th));
        const i64 dy = std::llround(1e6 * std::sin(th));
        if ((dx || dy) && all_forward_small(dx, dy)) return true;
    }
    // Perpendiculars to each edge, nudged just inside: if any open
    // half-plane works, one of these exact candidates works.
    int256 maxsq = 0;
    for (const Vec2i& w : path_edges) {
        const int256 s = int256(w.x) * w.x + int256(w.y) * w.y;
        maxsq = std::max(maxsq, s);
    }
    const int256 M = maxsq + 1;
    auto all_forward_big = [&](const int256& dx, const int256& dy) {
        for (const Vec2i& w : path_edges) {
            const int256 s = dx * w.x + dy * w.y;
            if (s <= 0) return false;
        }
        return true;
    };
    for (const Vec2i& w : path_edges) {
        const int256 px = int256(-w.y) * M;
        const int256 py = int256(w.x) * M;
        for (int sign : {1, -1}) {
            if (all_forward_big(px + sign * w.x, py + sign * w.y)) return true;
            if (all_forward_big(-px + sign * w.x, -py + sign * w.y)) return true;
        }
    }
    return false;
}

std::vector<CheckReport> run_checks(const Drawing& d, const std::vector<std::string>& names,
                                    const VerifyOptions& opt,
                                    std::optional<double> min_resolution) {
    std::vector<CheckReport> out;
    for (const std::string& name : names) {
        if (name == "crossing") out.push_back(check_crossing_free(d, opt));
        else if (name == "monotone") out.push_back(check_monotone(d, opt));
        else if (name == "strong") out.push_back(check_strong_monotone(d, opt));
        else if (name == "convex") out.push_back(check_convex(d, opt));
        else if (name == "strict-convex") out.push_back(check_strictly_convex(d, opt));
        else if (name == "resolution") out.push_back(check_resolution(d, min_resolution, opt));
        else throw VerifyError("unknown check '" + name + "'");
    }
    return out;
}

std::string reports_to_json_text(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json j;
        j["check"] = r.check;
        j["pass"] = r.pass;
        j["detail"] = r.detail;
        j["witness_vertices"] = r.witness_vertices;
        nlohmann::ordered_json we = nlohmann::ordered_json::array();
        for (const auto& e : r.witness_edges) we.push_back({e[0], e[1]});
        j["witness_edges"] = std::move(we);
        if (r.measured) j["measured"] = *r.measured;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace monodraw
