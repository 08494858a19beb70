#include "monodraw/convex_grid.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace monodraw {

namespace {

int ceil_sqrt(int n) {
    int c = 1;
    while ((long long)c * c < n) ++c;
    return c;
}

// Vertices in an order where parents precede children.
std::vector<int> top_order(const RootedOrderedTree& t) {
    std::vector<int> order;
    order.reserve(t.n());
    order.push_back(t.root);
    for (size_t h = 0; h < order.size(); ++h)
        for (int c : t.children[order[h]]) order.push_back(c);
    return order;
}

std::vector<long long> subtree_sizes(const RootedOrderedTree& t) {
    const auto order = top_order(t);
    std::vector<long long> size(t.n(), 1);
    for (size_t i = order.size(); i-- > 1;) size[t.parent[order[i]]] += size[order[i]];
    return size;
}

}  // namespace

RankAssignment assign_ranks(const RootedOrderedTree& t) {
    const int n = t.n();
    if (n == 0) throw TreeError("assign_ranks: empty tree");
    RankAssignment ra;
    ra.rank_of_child.assign(n, 0);
    ra.child_of_rank.assign(n, -1);
    int next = 1;
    struct Frame {
        int v;
        size_t idx;
        bool ranked;
    };
    std::vector<Frame> stack;
    stack.push_back({t.root, 0, false});
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& kids = t.children[f.v];
        if (!f.ranked && (f.idx >= 1 || kids.empty())) {
            // leftmost subtree done: number the edge to the parent
            if (f.v != t.root) {
                ra.rank_of_child[f.v] = next;
                ra.child_of_rank[next] = f.v;
                ++next;
            }
            f.ranked = true;
        } else if (f.idx < kids.size()) {
            const int c = kids[f.idx++];
            stack.push_back({c, 0, false});
        } else {
            stack.pop_back();
        }
    }
    return ra;
}

SlopePlan build_slope_plan(const RootedOrderedTree& t, const RankAssignment& ranks) {
    // The mapping is positional: with inorder ranks every extended subtree of
    // the root is a consecutive rank block, so the plan only needs the block
    // sizes.  The parameter pins the traversal the plan is valid for.
    (void)ranks;
    const int n = t.n();
    if (n == 0) throw TreeError("build_slope_plan: empty tree");
    SlopePlan plan;
    plan.d = 4 * ceil_sqrt(n);
    plan.pool = farey_size(plan.d);
    plan.vec_of_rank.assign(n, Vec2i{0, 0});
    const long long e = n - 1;
    if (e == 0) return plan;

    const VectorSet src = farey_vectors(plan.d);
    if ((long long)src.size() < (long long)n + 1)
        throw std::logic_error("slope plan: vector pool smaller than the tree");

    // Split the root's extended subtrees into three consecutive runs of
    // roughly e/3 edges; with three or more subtrees every run is non-empty,
    // so the root uses all three cones and consecutive root edges stay less
    // than a half turn apart.
    const auto size = subtree_sizes(t);
    const auto& kids = t.children[t.root];
    const int m = (int)kids.size();
    long long r1 = e, r2 = 0;
    if (m >= 3) {
        std::vector<long long> prefix(m + 1, 0);
        for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + size[kids[i]];
        int j1 = m - 2;
        for (int j = 1; j <= m - 2; ++j) {
            if (3 * prefix[j] >= e) {
                j1 = j;
                break;
            }
        }
        int j2 = m - 1;
        for (int j = j1 + 1; j <= m - 1; ++j) {
            if (3 * prefix[j] >= 2 * e) {
                j2 = j;
                break;
            }
        }
        r1 = prefix[j1];
        r2 = prefix[j2] - prefix[j1];
    } else if (m == 2) {
        r1 = size[kids[0]];
        r2 = size[kids[1]];
    }
    const long long r3 = e - r1 - r2;
    plan.group_edges = {r1, r2, r3};
    if (m >= 3 && (r1 > n - 3 || r2 > n - 3 || r3 > n - 3))
        throw std::logic_error("slope plan: a cone group exceeds its capacity");

    // Interior vectors per cone, counterclockwise; src[0] generates only the
    // excluded boundary directions.  A group's placeholders pad its tail, so
    // real rank j within a group takes the j-th counterclockwise vector.
    auto cone_vec = [&](int g, long long j) -> Vec2i {
        if (g == 0) return {src[j].y, src[j].x};
        if (g == 1) {
            const Vec2i s = src[n - j + 1];
            return {-s.y, s.x};
        }
        return {src[j].x, -src[j].y};
    };
    for (long long r = 1; r <= e; ++r) {
        int g;
        long long local;
        if (r <= r1) {
            g = 0;
            local = r;
        } else if (r <= r1 + r2) {
            g = 1;
            local = r - r1;
        } else {
            g = 2;
            local = r - r1 - r2;
        }
        plan.vec_of_rank[r] = cone_vec(g, local);
    }
    return plan;
}

SlopePlan build_slope_plan(const RootedOrderedTree& t) {
    return build_slope_plan(t, assign_ranks(t));
}

Drawing draw_from_vectors(const RootedOrderedTree& t, const std::vector<Vec2i>& vec_of_child) {
    const int n = t.n();
    if (n == 0) throw TreeError("draw_from_vectors: empty tree");
    if ((int)vec_of_child.size() != n)
        throw TreeError("draw_from_vectors: need one vector per vertex");
    Drawing d;
    d.kind = CoordKind::exact_int;
    d.root = t.label[t.root];
    d.label = t.label;
    d.ipos.assign(n, Vec2i{0, 0});
    const auto order = top_order(t);
    for (size_t i = 1; i < order.size(); ++i) {
        const int v = order[i];
        d.ipos[v] = d.ipos[t.parent[v]] + vec_of_child[v];
    }
    for (int v = 0; v < n; ++v)
        if (v != t.root) d.edges.push_back({t.parent[v], v});
    for (int v = 0; v < n; ++v) {
        if (v == t.root || !t.children[v].empty()) continue;
        d.irays.push_back({v, vec_of_child[v]});
    }
    if (n >= 2 && t.children[t.root].size() == 1)
        d.irays.push_back({t.root, -vec_of_child[t.children[t.root][0]]});
    d.validate();
    return d;
}

Drawing draw_inorder(const RootedOrderedTree& t) {
    if (t.n() == 0) throw TreeError("draw_inorder: empty tree");
    if (auto v = find_degree2_vertex(t))
        throw TreeError("draw_inorder: vertex '" + t.label[*v] +
                        "' has degree 2; the construction needs trees without degree-2 "
                        "vertices (binarize can preprocess)");
    const RankAssignment ranks = assign_ranks(t);
    const SlopePlan plan = build_slope_plan(t, ranks);
    std::vector<Vec2i> vec_of_child(t.n(), Vec2i{0, 0});
    for (int v = 0; v < t.n(); ++v)
        if (v != t.root) vec_of_child[v] = plan.vec_of_rank[ranks.rank_of_child[v]];
    return draw_from_vectors(t, vec_of_child);
}

CircleFan build_circle_fan(int count) {
    if (count < 2 || count % 2 != 0)
        throw std::invalid_argument("circle fan: count must be even and at least 2");
    const int m = (count + 7) / 8;
    int d = 1;
    while (farey_size(d) < m + 2) ++d;
    CircleFan fan;
    fan.d = d;
    fan.pool = farey_size(d);
    const VectorSet src = farey_vectors(d);
    const VectorSet sources(src.begin() + 1, src.begin() + 1 + m);
    const VectorSet full = octant_fill(sources);
    if ((int)full.size() != 8 * m) throw std::logic_error("circle fan: octant images collide");
    // Trim whole antipodal pairs so the fan stays centrally symmetric.
    const int pairs = (8 * m - count) / 2;
    std::vector<char> drop(full.size(), 0);
    for (int p = 0; p < pairs; ++p) {
        drop[4 * m - 1 - p] = 1;
        drop[8 * m - 1 - p] = 1;
    }
    fan.vecs.reserve(count);
    for (size_t i = 0; i < full.size(); ++i)
        if (!drop[i]) fan.vecs.push_back(full[i]);
    return fan;
}

Drawing draw_ce_grid(const RootedOrderedTree& t) {
    const int n = t.n();
    if (n == 0) throw TreeError("draw_ce_grid: empty tree");
    // A degree-2 root is fine: its two subtrees split the fan in halves, so
    // the central symmetry makes the two root edges exactly antipodal and
    // both root angles straight.  Elsewhere degree 2 would force a strictly
    // reflex corner, so those vertices are rejected.
    for (int v = 0; v < n; ++v)
        if (v != t.root && t.degree(v) == 2)
            throw TreeError("draw_ce_grid: vertex '" + t.label[v] +
                            "' has degree 2; the construction needs trees without "
                            "degree-2 vertices below the root (binarize can preprocess)");
    if (n == 1) return draw_from_vectors(t, {Vec2i{0, 0}});

    // Leaves in depth-first order take every other fan vector.
    std::vector<int> leaves;
    {
        std::vector<int> stack{t.root};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (t.children[v].empty()) {
                leaves.push_back(v);
                continue;
            }
            for (size_t i = t.children[v].size(); i-- > 0;) stack.push_back(t.children[v][i]);
        }
    }
    const int k = (int)leaves.size();
    const CircleFan fan = build_circle_fan(2 * k);

    std::vector<int> lo(n, INT_MAX), hi(n, -1);
    for (int i = 0; i < k; ++i) lo[leaves[i]] = hi[leaves[i]] = 2 * i;
    const auto order = top_order(t);
    for (size_t i = order.size(); i-- > 1;) {
        const int v = order[i], p = t.parent[v];
        lo[p] = std::min(lo[p], lo[v]);
        hi[p] = std::max(hi[p], hi[v]);
    }

    std::vector<Vec2i> vec_of_child(n, Vec2i{0, 0});
    for (int v = 0; v < n; ++v) {
        if (v == t.root) continue;
        if (t.children[v].empty()) {
            vec_of_child[v] = fan.vecs[lo[v]];
            continue;
        }
        // Interior edge: fan vector strictly inside the subtree's extreme
        // positions, nearest the bisector, ties toward the smaller angle.
        if (hi[v] - lo[v] < 2)
            throw std::logic_error("ce grid: no admissible vector for an interior edge");
        const int q = (lo[v] + hi[v]) / 2;
        vec_of_child[v] = fan.vecs[q];
    }
    return draw_from_vectors(t, vec_of_child);
}

}  // namespace monodraw
