#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "monodraw/primvec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

using namespace monodraw;

namespace {

// Independent sieve: phi(1..d) by the classic smallest-prime-factor walk.
std::vector<long long> phi_table(int d) {
    std::vector<long long> phi(d + 1);
    std::iota(phi.begin(), phi.end(), 0LL);
    for (int p = 2; p <= d; ++p)
        if (phi[p] == p)  // p prime
            for (int m = p; m <= d; m += p) phi[m] -= phi[m] / p;
    return phi;
}

// Brute-force gcd enumeration of the source cone, sorted by slope.
VectorSet brute_farey(int d) {
    VectorSet out;
    for (long long y = 1; y <= d; ++y)
        for (long long x = 0; x <= y; ++x)
            if (std::gcd(x, y) == 1) out.push_back({x, y});
    std::sort(out.begin(), out.end(),
              [](Vec2i a, Vec2i b) { return a.x * b.y < b.x * a.y; });
    return out;
}

// Unsigned angle via long double trig, the floating cross-check for the
// exact comparisons inside min_pairwise_angle.
long double angle_ld(Vec2i a, Vec2i b) {
    const long double c = std::fabs((long double)a.x * b.y - (long double)a.y * b.x);
    const long double t = (long double)a.x * b.x + (long double)a.y * b.y;
    return std::atan2(c, t);
}

// Canonical source-cone representative of a fan vector: fold signs and the
// diagonal reflection away.
Vec2i to_source_cone(Vec2i v) {
    long long x = std::llabs(v.x), y = std::llabs(v.y);
    if (x > y) std::swap(x, y);
    return {x, y};
}

}  // namespace

TEST_CASE("farey base cases") {
    const VectorSet f1 = farey_vectors(1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0] == Vec2i{0, 1});
    CHECK(f1[1] == Vec2i{1, 1});

    const VectorSet f6 = farey_vectors(6);
    REQUIRE(f6.size() == 13);
    const VectorSet expect{{0, 1}, {1, 6}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
                           {3, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 1}};
    CHECK(f6 == expect);

    CHECK(farey_vectors(12).size() == 47);
    CHECK_THROWS(farey_vectors(0));
}

TEST_CASE("farey matches the brute-force enumeration") {
    for (int d : {1, 2, 3, 7, 10, 25, 64}) {
        CAPTURE(d);
        CHECK(farey_vectors(d) == brute_farey(d));
    }
}

TEST_CASE("cardinality equals the phi-sum, d <= 200") {
    const auto phi = phi_table(200);
    long long sum = 0;
    for (int d = 1; d <= 200; ++d) {
        sum += phi[d];
        CHECK(farey_size(d) == 1 + sum);
        CHECK((long long)farey_vectors(d).size() == 1 + sum);
    }
}

TEST_CASE("neighbor identity holds for all d <= 200") {
    for (int d = 1; d <= 200; ++d) {
        CAPTURE(d);
        CHECK(verify_neighbor_identity(farey_vectors(d)));
    }
    // Explicit arithmetic on one instance, independent of the library loop.
    const VectorSet f = farey_vectors(50);
    for (size_t i = 0; i + 1 < f.size(); ++i)
        CHECK(f[i].y * f[i + 1].x - f[i].x * f[i + 1].y == 1);
}

TEST_CASE("neighbor identity is order-sensitive") {
    CHECK(verify_neighbor_identity({{0, 1}, {1, 1}}));
    VectorSet shuffled = farey_vectors(6);
    std::swap(shuffled[3], shuffled[7]);
    CHECK_FALSE(verify_neighbor_identity(shuffled));
    VectorSet rev = farey_vectors(6);
    std::reverse(rev.begin(), rev.end());
    CHECK_FALSE(verify_neighbor_identity(rev));
}

TEST_CASE("select_d_for pinned values") {
    CHECK(select_d_for(13) == 12);
    CHECK(select_d_for(1) == 4);
    CHECK(select_d_for(100) == 33);
    CHECK(farey_size(33) >= 100);
    for (long long k : {2LL, 5LL, 40LL, 500LL, 2000LL}) {
        CAPTURE(k);
        CHECK(farey_size(select_d_for(k)) >= k);
    }
}

TEST_CASE("cone transforms: fixed images and ranges") {
    CHECK(map_to_cone({1, 2}, Cone::c1) == Vec2i{2, 1});
    CHECK(map_to_cone({1, 2}, Cone::c2) == Vec2i{-2, 1});
    CHECK(map_to_cone({1, 2}, Cone::c3) == Vec2i{1, -2});
    CHECK_THROWS(map_to_cone({2, 1}, Cone::c1));  // outside the source cone

    const VectorSet f = farey_vectors(9);
    const VectorSet c1 = map_to_cone(f, Cone::c1);
    const VectorSet c2 = map_to_cone(f, Cone::c2);
    const VectorSet c3 = map_to_cone(f, Cone::c3);
    REQUIRE(c1.size() == f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        CHECK((c1[i].x >= c1[i].y && c1[i].y >= 0));                  // [0, pi/4]
        CHECK((c2[i].x <= 0 && c2[i].y >= 0 && -c2[i].x >= c2[i].y));  // [3pi/4, pi]
        CHECK((c3[i].x >= 0 && c3[i].y <= 0 && -c3[i].y >= c3[i].x));  // [3pi/2, 7pi/4]
    }
    for (const VectorSet* s : {&c1, &c2, &c3})
        for (size_t i = 0; i < s->size(); ++i)
            for (size_t j = i + 1; j < s->size(); ++j)
                CHECK(cross((*s)[i], (*s)[j]) != 0);  // slopes stay distinct
}

TEST_CASE("octant fill covers the circle") {
    const VectorSet fan = octant_fill(farey_vectors(6));
    REQUIRE(fan.size() == 96);
    CHECK(fan[0] == Vec2i{1, 0});
    for (size_t i = 0; i + 1 < fan.size(); ++i) CHECK(dir_less(fan[i], fan[i + 1]));
    // All eight images of an interior vector appear.
    for (Vec2i v : {Vec2i{1, 2}, Vec2i{2, 1}, Vec2i{-1, 2}, Vec2i{-2, 1}, Vec2i{-1, -2},
                    Vec2i{-2, -1}, Vec2i{1, -2}, Vec2i{2, -1}})
        CHECK(std::find(fan.begin(), fan.end(), v) != fan.end());
    // Boundary vectors appear once each (four axis, four diagonal images).
    CHECK(std::count(fan.begin(), fan.end(), Vec2i{0, 1}) == 1);
    CHECK(std::count(fan.begin(), fan.end(), Vec2i{1, 1}) == 1);
}

TEST_CASE("minimum pairwise angle: pinned fan values") {
    const MinAnglePair right = min_pairwise_angle({{1, 0}, {0, 1}});
    CHECK(right.radians == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

    const MinAnglePair m6 = min_pairwise_angle(octant_fill(farey_vectors(6)));
    CHECK(m6.radians == doctest::Approx(std::atan(1.0 / 50.0)).epsilon(1e-12));
    Vec2i a = to_source_cone(m6.a), b = to_source_cone(m6.b);
    if (a.x * b.y > b.x * a.y) std::swap(a, b);  // fraction order x/y
    CHECK(a == Vec2i{4, 5});
    CHECK(b == Vec2i{5, 6});

    const MinAnglePair m12 = min_pairwise_angle(octant_fill(farey_vectors(12)));
    CHECK(m12.radians == doctest::Approx(std::atan(1.0 / 242.0)).epsilon(1e-12));
    Vec2i a2 = to_source_cone(m12.a), b2 = to_source_cone(m12.b);
    if (a2.x * b2.y > b2.x * a2.y) std::swap(a2, b2);
    CHECK(a2 == Vec2i{10, 11});
    CHECK(b2 == Vec2i{11, 12});

    CHECK_THROWS(min_pairwise_angle({{1, 0}}));
    CHECK_THROWS(min_pairwise_angle({{1, 0}, {2, 0}}));  // duplicate direction
}

TEST_CASE("minimum pairwise angle agrees with the floating brute force") {
    for (int d : {3, 5, 8}) {
        CAPTURE(d);
        const VectorSet fan = octant_fill(farey_vectors(d));
        const MinAnglePair got = min_pairwise_angle(fan);
        long double best = 100;
        for (size_t i = 0; i < fan.size(); ++i)
            for (size_t j = i + 1; j < fan.size(); ++j)
                best = std::min(best, angle_ld(fan[i], fan[j]));
        CHECK(std::fabs(got.radians - best) <= 1e-15L);
        CHECK(std::fabs(angle_ld(got.a, got.b) - best) <= 1e-15L);
    }
}

TEST_CASE("fan angle bound holds for arbitrary subsets") {
    std::mt19937_64 rng(2024);
    for (int d : {6, 12, 30}) {
        const VectorSet pool = farey_vectors(d);
        const long long pool_size = (long long)pool.size();
        // The full pool itself.
        CHECK(min_pairwise_angle(pool).radians >=
              fan_angle_lower_bound(pool_size, pool_size));
        for (int trial = 0; trial < 40; ++trial) {
            VectorSet subset;
            for (const Vec2i& v : pool)
                if (rng() % 3 == 0) subset.push_back(v);
            if (subset.size() < 2) continue;
            const double bound = fan_angle_lower_bound(pool_size, (long long)subset.size());
            CHECK(min_pairwise_angle(subset).radians >= bound);
        }
    }
}

TEST_CASE("resolution ratio against the even-spread reference, d in 6..60") {
    for (int d = 6; d <= 60; ++d) {
        CAPTURE(d);
        const VectorSet p = farey_vectors(d);
        const double phi = min_pairwise_angle(p).radians;
        const double opt = std::numbers::pi / (4.0 * (double)p.size());
        CHECK(phi / opt < 6.0);
        CHECK(opt / phi < 6.0);
    }
}
