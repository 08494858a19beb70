#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monodraw/convex_grid.hpp"
#include "monodraw/primvec.hpp"
#include "monodraw/tree.hpp"
#include "monodraw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using namespace monodraw;

namespace {

int ceil_sqrt(int n) {
    int c = 1;
    while ((long long)c * c < n) ++c;
    return c;
}

long double angle_deg(Vec2i v) {
    long double a = std::atan2((long double)v.y, (long double)v.x) * 180.0L / 3.14159265358979323846264338327950288L;
    if (a < 0) a += 360.0L;
    return a;
}

// Angular span of a direction set that fits in an open half-plane: the
// complement of the largest circular gap.
long double span_deg(std::vector<Vec2i> vs) {
    std::vector<long double> a;
    for (auto v : vs) a.push_back(angle_deg(v));
    std::sort(a.begin(), a.end());
    long double max_gap = 360.0L - a.back() + a.front();
    for (size_t i = 1; i < a.size(); ++i) max_gap = std::max(max_gap, a[i] - a[i - 1]);
    return 360.0L - max_gap;
}

std::vector<int> subtree_vertices(const RootedOrderedTree& t, int head) {
    std::vector<int> vs{head};
    for (size_t i = 0; i < vs.size(); ++i)
        for (int c : t.children[vs[i]]) vs.push_back(c);
    return vs;
}

std::vector<int> leaves_in_dfs_order(const RootedOrderedTree& t) {
    std::vector<int> out, stack{t.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (t.children[v].empty()) {
            out.push_back(v);
            continue;
        }
        for (size_t i = t.children[v].size(); i-- > 0;) stack.push_back(t.children[v][i]);
    }
    return out;
}

std::vector<int> depths(const RootedOrderedTree& t) {
    std::vector<int> d(t.n(), 0);
    for (int v : subtree_vertices(t, t.root))
        if (v != t.root) d[v] = d[t.parent[v]] + 1;
    return d;
}

// Ranks on the walk from a up to its ancestor w, bottom-up, w excluded.
std::vector<int> ranks_up_to(const RootedOrderedTree& t, const RankAssignment& ra, int a, int w) {
    std::vector<int> rs;
    for (int v = a; v != w; v = t.parent[v]) rs.push_back(ra.rank_of_child[v]);
    return rs;
}

int lca(const RootedOrderedTree& t, const std::vector<int>& depth, int a, int b) {
    while (depth[a] > depth[b]) a = t.parent[a];
    while (depth[b] > depth[a]) b = t.parent[b];
    while (a != b) {
        a = t.parent[a];
        b = t.parent[b];
    }
    return a;
}

// 0, 1, 2 for the three target cones of the slope plan, -1 otherwise.
int cone_of(Vec2i v) {
    if (v.x >= v.y && v.y >= 1) return 0;
    if (v.x <= -1 && v.y >= 1 && -v.x >= v.y) return 1;
    if (v.x >= 1 && v.y <= -1 && -v.y >= v.x) return 2;
    return -1;
}

void expect_all_checks_pass(const Drawing& d) {
    for (const auto* name : {"crossing", "monotone", "strict-convex"}) {
        auto reps = run_checks(d, {name});
        REQUIRE(reps.size() == 1);
        CAPTURE(name);
        CAPTURE(reps[0].detail);
        CHECK(reps[0].pass);
    }
}

}  // namespace

TEST_CASE("ranks follow the leftmost-subtree-first numbering") {
    auto t = parse_tree_text("((c,d)a,b)root");
    auto ra = assign_ranks(t);
    std::map<std::string, int> got;
    for (int v = 0; v < t.n(); ++v)
        if (v != t.root) got[t.label[v]] = ra.rank_of_child[v];
    CHECK(got == std::map<std::string, int>{{"c", 1}, {"a", 2}, {"d", 3}, {"b", 4}});
    CHECK(ra.rank_of_child[t.root] == 0);
    for (int r = 1; r <= 4; ++r) CHECK(ra.rank_of_child[ra.child_of_rank[r]] == r);

    auto single = parse_tree_text("(a)r");
    CHECK(assign_ranks(single).rank_of_child[single.index_of("a")] == 1);

    auto star = parse_tree_text("(a,b,c,d)r");
    auto sr = assign_ranks(star);
    for (int i = 0; i < 4; ++i)
        CHECK(sr.rank_of_child[star.children[star.root][i]] == i + 1);
}

TEST_CASE("ranks are a bijection sandwiching each vertex between its first subtree and the rest") {
    for (int n : {2, 9, 40, 121}) {
        for (unsigned long long seed : {1ULL, 5ULL, 9ULL}) {
            auto t = gen_random_tree(n, 4, seed);
            auto ra = assign_ranks(t);
            CAPTURE(n);
            CAPTURE(seed);

            std::vector<char> seen(n, 0);
            for (int v = 0; v < n; ++v) {
                if (v == t.root) {
                    CHECK(ra.rank_of_child[v] == 0);
                    continue;
                }
                int r = ra.rank_of_child[v];
                REQUIRE(r >= 1);
                REQUIRE(r <= n - 1);
                CHECK(!seen[r]);
                seen[r] = 1;
                CHECK(ra.child_of_rank[r] == v);
            }

            for (int v = 0; v < n; ++v) {
                const auto& kids = t.children[v];
                if (kids.empty()) continue;
                int below = 0;
                for (int u : subtree_vertices(t, kids[0])) below = std::max(below, ra.rank_of_child[u]);
                int above = n;
                for (size_t i = 1; i < kids.size(); ++i)
                    for (int u : subtree_vertices(t, kids[i]))
                        above = std::min(above, ra.rank_of_child[u]);
                if (v != t.root) {
                    CHECK(below < ra.rank_of_child[v]);
                    CHECK(ra.rank_of_child[v] < above);
                } else {
                    CHECK(below < above);
                }
            }
        }
    }
}

TEST_CASE("around each face the ranks rise toward the left leaf and fall toward the right leaf") {
    for (int n : {4, 20, 75, 200}) {
        for (unsigned long long seed : {2ULL, 11ULL}) {
            auto t = gen_random_tree(n, 5, seed, /*no_deg2=*/true);
            auto ra = assign_ranks(t);
            auto dep = depths(t);
            auto ls = leaves_in_dfs_order(t);
            REQUIRE(ls.size() >= 2);
            for (size_t i = 0; i < ls.size(); ++i) {
                int left = ls[i], right = ls[(i + 1) % ls.size()];
                int w = lca(t, dep, left, right);
                auto up_left = ranks_up_to(t, ra, left, w);    // decreasing bottom-up
                auto up_right = ranks_up_to(t, ra, right, w);  // increasing bottom-up
                CAPTURE(n);
                CAPTURE(seed);
                CAPTURE(i);
                for (size_t j = 0; j + 1 < up_left.size(); ++j) CHECK(up_left[j] > up_left[j + 1]);
                for (size_t j = 0; j + 1 < up_right.size(); ++j) CHECK(up_right[j] < up_right[j + 1]);
            }
        }
    }
}

TEST_CASE("slope plan fills three far-apart cones with distinct primitive vectors") {
    for (int n : {4, 10, 33, 200}) {
        for (unsigned long long seed : {3ULL, 8ULL}) {
            auto t = gen_random_tree(n, 6, seed, /*no_deg2=*/true);
            auto ra = assign_ranks(t);
            auto plan = build_slope_plan(t, ra);
            CAPTURE(n);
            CAPTURE(seed);

            CHECK(plan.d == 4 * ceil_sqrt(n));
            CHECK(plan.pool == farey_size(plan.d));
            CHECK(plan.group_edges[0] + plan.group_edges[1] + plan.group_edges[2] == n - 1);
            REQUIRE((int)plan.vec_of_rank.size() == n);

            for (int r = 1; r <= n - 1; ++r) {
                Vec2i v = plan.vec_of_rank[r];
                CHECK(std::gcd(std::abs((long long)v.x), std::abs((long long)v.y)) == 1);
                CHECK(std::max(std::abs((long long)v.x), std::abs((long long)v.y)) <= plan.d);
                CHECK(cone_of(v) >= 0);
            }
            for (int r = 1; r <= n - 1; ++r)
                for (int s = r + 1; s <= n - 1; ++s)
                    CHECK(cross(plan.vec_of_rank[r], plan.vec_of_rank[s]) != 0);

            // Rank blocks of the root's subtrees land in single cones, in
            // counterclockwise order within each cone.
            long long start = 0;
            for (int c : t.children[t.root]) {
                auto sub = subtree_vertices(t, c);
                std::vector<int> rs;
                for (int u : sub) rs.push_back(ra.rank_of_child[u]);
                std::sort(rs.begin(), rs.end());
                for (size_t j = 0; j < rs.size(); ++j) CHECK(rs[j] == (long long)start + 1 + (long long)j);
                int cone = cone_of(plan.vec_of_rank[rs.front()]);
                std::vector<Vec2i> vs;
                for (int r : rs) vs.push_back(plan.vec_of_rank[r]);
                for (size_t j = 0; j + 1 < vs.size(); ++j) {
                    CHECK(cone_of(vs[j + 1]) == cone);
                    CHECK(cross(vs[j], vs[j + 1]) > 0);
                }
                CHECK(span_deg(vs) <= 45.0L + 1e-9L);
                start += (long long)rs.size();
            }

            // Group sizes line up with whole subtree blocks.
            std::set<long long> prefixes;
            long long acc = 0;
            for (int c : t.children[t.root]) {
                acc += (long long)subtree_vertices(t, c).size();
                prefixes.insert(acc);
            }
            if (t.children[t.root].size() >= 3) {
                CHECK(prefixes.count(plan.group_edges[0]));
                CHECK(prefixes.count(plan.group_edges[0] + plan.group_edges[1]));
                for (long long g : plan.group_edges) CHECK(g >= 1);
            }

            // Consecutive root edges in rank order stay within a half turn.
            if (t.children[t.root].size() >= 3) {
                std::vector<Vec2i> re;
                for (int c : t.children[t.root]) re.push_back(plan.vec_of_rank[ra.rank_of_child[c]]);
                for (size_t j = 0; j < re.size(); ++j) CHECK(cross(re[j], re[(j + 1) % re.size()]) > 0);
            }
        }
    }
}

TEST_CASE("the four-vertex star takes one root edge per cone with convex gaps") {
    auto t = parse_tree_text("(a,b,c)r");
    auto plan = build_slope_plan(t);
    CHECK(plan.d == 8);
    CHECK(plan.group_edges == std::array<long long, 3>{1, 1, 1});
    CHECK(plan.vec_of_rank[1] == Vec2i{8, 1});
    CHECK(plan.vec_of_rank[2] == Vec2i{-5, 1});
    CHECK(plan.vec_of_rank[3] == Vec2i{1, -8});
    for (int r = 1; r <= 3; ++r) {
        CHECK(cone_of(plan.vec_of_rank[r]) == r - 1);
        CHECK(cross(plan.vec_of_rank[r], plan.vec_of_rank[r % 3 + 1]) > 0);
    }

    auto d = draw_inorder(t);
    CHECK(d.ipos[t.index_of("a")] == Vec2i{8, 1});
    CHECK(d.ipos[t.index_of("b")] == Vec2i{-5, 1});
    CHECK(d.ipos[t.index_of("c")] == Vec2i{1, -8});
    expect_all_checks_pass(d);
}

TEST_CASE("the inorder drawing rejects degree-2 vertices by name") {
    CHECK_THROWS_WITH_AS(draw_inorder(parse_tree_text("(a,(b)c,d)r")),
                         doctest::Contains("'c'"), TreeError);
    CHECK_THROWS_WITH_AS(draw_inorder(parse_tree_text("(a,b)r")),
                         doctest::Contains("'r'"), TreeError);
}

TEST_CASE("a single edge draws with continuation rays at both ends") {
    auto t = parse_tree_text("(a)r");
    auto d = draw_inorder(t);
    CHECK(d.ipos[t.index_of("r")] == Vec2i{0, 0});
    CHECK(d.ipos[t.index_of("a")] == Vec2i{8, 1});
    REQUIRE(d.irays.size() == 2);
    std::map<int, Vec2i> ray;
    for (const auto& r : d.irays) ray[r.leaf] = r.dir;
    CHECK(ray.at(t.index_of("a")) == Vec2i{8, 1});
    CHECK(ray.at(t.index_of("r")) == Vec2i{-8, -1});
    for (const auto* name : {"crossing", "monotone", "strong", "convex", "strict-convex"}) {
        auto reps = run_checks(d, {name});
        CHECK(reps[0].pass);
    }
}

TEST_CASE("inorder drawings verify as strictly convex monotone plane drawings on the stated grid") {
    for (int n : {10, 61, 200}) {
        for (unsigned long long seed : {1ULL, 2ULL, 7ULL}) {
            auto t = gen_random_tree(n, 5, seed, /*no_deg2=*/true);
            auto ra = assign_ranks(t);
            auto plan = build_slope_plan(t, ra);
            auto d = draw_inorder(t);
            CAPTURE(n);
            CAPTURE(seed);
            d.validate();
            expect_all_checks_pass(d);

            long long bound = (long long)(n - 1) * 4 * ceil_sqrt(n);
            for (int v = 0; v < n; ++v) {
                CHECK(std::abs((long long)d.ipos[v].x) <= bound);
                CHECK(std::abs((long long)d.ipos[v].y) <= bound);
            }

            // Each edge realizes exactly the planned vector of its rank.
            for (int v = 0; v < n; ++v) {
                if (v == t.root) continue;
                Vec2i got{d.ipos[v].x - d.ipos[t.parent[v]].x, d.ipos[v].y - d.ipos[t.parent[v]].y};
                CHECK(got == plan.vec_of_rank[ra.rank_of_child[v]]);
            }

            // Every leaf ray continues its edge outward.
            std::map<int, Vec2i> ray;
            for (const auto& r : d.irays) ray[r.leaf] = r.dir;
            for (int v = 0; v < n; ++v) {
                if (v == t.root || !t.children[v].empty()) continue;
                REQUIRE(ray.count(v));
                Vec2i e{d.ipos[v].x - d.ipos[t.parent[v]].x, d.ipos[v].y - d.ipos[t.parent[v]].y};
                CHECK(ray[v] == e);
            }

            auto res = check_resolution(d);
            REQUIRE(res.measured.has_value());
            CHECK(*res.measured >= fan_angle_lower_bound(plan.pool, n - 1));
        }
    }
}

TEST_CASE("a hand-assigned counterclockwise fan draws a three-subtree tree convexly") {
    auto t = parse_tree_text("(((a4,a5)a1,a2,a3)a,((b3,b4)b1,b2)b,((c3,c4)c1,c2)c)r");
    REQUIRE(t.n() == 17);
    auto ra = assign_ranks(t);
    const std::map<std::string, int> expected{
        {"a4", 1}, {"a1", 2}, {"a5", 3}, {"a", 4},  {"a2", 5},  {"a3", 6},
        {"b3", 7}, {"b1", 8}, {"b4", 9}, {"b", 10}, {"b2", 11}, {"c3", 12},
        {"c1", 13}, {"c4", 14}, {"c", 15}, {"c2", 16}};
    for (const auto& [name, r] : expected) CHECK(ra.rank_of_child[t.index_of(name)] == r);

    auto fan = octant_fill(farey_vectors(2));
    const VectorSet fan_expected{{1, 0},  {2, 1},   {1, 1},   {1, 2},  {0, 1},  {-1, 2},
                                 {-1, 1}, {-2, 1},  {-1, 0},  {-2, -1}, {-1, -1}, {-1, -2},
                                 {0, -1}, {1, -2},  {1, -1},  {2, -1}};
    CHECK(fan == fan_expected);

    std::vector<Vec2i> vec_of_child(t.n(), Vec2i{0, 0});
    for (int r = 1; r <= 16; ++r) vec_of_child[ra.child_of_rank[r]] = fan[r - 1];
    auto d = draw_from_vectors(t, vec_of_child);
    expect_all_checks_pass(d);

    // Root edges keep every gap below a half turn.
    std::vector<Vec2i> re;
    for (int c : t.children[t.root]) re.push_back(vec_of_child[c]);
    for (size_t j = 0; j < re.size(); ++j) CHECK(cross(re[j], re[(j + 1) % re.size()]) > 0);

    // Each root subtree's vectors span less than a half turn.
    std::vector<long double> expected_span{116.5650511770779893L, 90.0L, 90.0L};
    int i = 0;
    for (int c : t.children[t.root]) {
        std::vector<Vec2i> vs;
        for (int u : subtree_vertices(t, c)) vs.push_back(vec_of_child[u]);
        CHECK(std::fabs((double)(span_deg(vs) - expected_span[i])) < 1e-9);
        CHECK(span_deg(vs) < 180.0L);
        ++i;
    }

    CHECK_THROWS_AS(draw_from_vectors(t, std::vector<Vec2i>(3)), TreeError);
}

TEST_CASE("the circle fan is centrally symmetric, sorted, and well spread") {
    CHECK(build_circle_fan(2).vecs == VectorSet{{2, 1}, {-2, -1}});
    CHECK(build_circle_fan(6).vecs ==
          VectorSet{{2, 1}, {1, 2}, {-1, 2}, {-2, -1}, {-1, -2}, {1, -2}});
    CHECK(build_circle_fan(16).vecs ==
          VectorSet{{3, 1}, {2, 1}, {1, 2}, {1, 3}, {-1, 3}, {-1, 2}, {-2, 1}, {-3, 1},
                    {-3, -1}, {-2, -1}, {-1, -2}, {-1, -3}, {1, -3}, {1, -2}, {2, -1}, {3, -1}});
    CHECK_THROWS_AS(build_circle_fan(5), std::invalid_argument);
    CHECK_THROWS_AS(build_circle_fan(0), std::invalid_argument);
    CHECK_THROWS_AS(build_circle_fan(-2), std::invalid_argument);

    for (int count : {2, 4, 6, 10, 16, 26, 40}) {
        auto fan = build_circle_fan(count);
        CAPTURE(count);
        REQUIRE((int)fan.vecs.size() == count);
        std::set<std::pair<long long, long long>> have;
        for (auto v : fan.vecs) have.insert({v.x, v.y});
        for (auto v : fan.vecs) CHECK(have.count({-v.x, -v.y}));
        for (size_t i = 0; i < fan.vecs.size(); ++i)
            for (size_t j = i + 1; j < fan.vecs.size(); ++j) {
                bool distinct = cross(fan.vecs[i], fan.vecs[j]) != 0;
                bool antipodal = fan.vecs[i].x == -fan.vecs[j].x && fan.vecs[i].y == -fan.vecs[j].y;
                CHECK((distinct || antipodal));
            }
        if (count >= 4)
            for (size_t i = 0; i < fan.vecs.size(); ++i)
                CHECK(cross(fan.vecs[i], fan.vecs[(i + 1) % fan.vecs.size()]) > 0);
    }
}

TEST_CASE("the fan drawing handles stars, balanced binaries, and a straight-through root") {
    auto star = parse_tree_text("(a,b,c)r");
    auto ds = draw_ce_grid(star);
    CHECK(ds.ipos[star.index_of("a")] == Vec2i{2, 1});
    CHECK(ds.ipos[star.index_of("b")] == Vec2i{-1, 2});
    CHECK(ds.ipos[star.index_of("c")] == Vec2i{-1, -2});
    expect_all_checks_pass(ds);

    auto bin = gen_complete_binary(3);
    auto db = draw_ce_grid(bin);
    expect_all_checks_pass(db);
    // The two root edges are exactly antipodal, so the root reads as a
    // straight point on a path.
    auto kids = bin.children[bin.root];
    REQUIRE(kids.size() == 2);
    Vec2i e0 = db.ipos[kids[0]], e1 = db.ipos[kids[1]];
    CHECK(e0.x == -e1.x);
    CHECK(e0.y == -e1.y);
    auto res = check_resolution(db);
    REQUIRE(res.measured.has_value());
    CHECK(*res.measured >= min_pairwise_angle(build_circle_fan(16).vecs).radians - 1e-12);

    auto two = parse_tree_text("(a,b)r");
    auto dt = draw_ce_grid(two);
    CHECK(dt.ipos[two.index_of("a")] == Vec2i{2, 1});
    CHECK(dt.ipos[two.index_of("b")] == Vec2i{-2, -1});
    expect_all_checks_pass(dt);

    CHECK_THROWS_WITH_AS(draw_ce_grid(parse_tree_text("((a)b,c,d)r")),
                         doctest::Contains("'b'"), TreeError);
    CHECK(draw_ce_grid(parse_tree_text("r")).n() == 1);

    for (unsigned long long seed : {4ULL, 13ULL}) {
        auto t = gen_random_tree(90, 5, seed, /*no_deg2=*/true);
        auto d = draw_ce_grid(t);
        CAPTURE(seed);
        d.validate();
        expect_all_checks_pass(d);
    }
}
