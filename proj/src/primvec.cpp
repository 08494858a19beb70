#include "monodraw/primvec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace monodraw {

VectorSet farey_vectors(int d) {
    if (d < 1) throw std::invalid_argument("farey_vectors: d must be >= 1");
    VectorSet out;
    // Next-term recurrence over irreducible fractions p/q in [0, 1]:
    // starting from 0/1, 1/d, each step k = (q0 + d) / q1 yields
    // p2 = k*p1 - p0, q2 = k*q1 - q0.
    long long p0 = 0, q0 = 1, p1 = 1, q1 = d;
    out.push_back({0, 1});
    while (!(p1 == 1 && q1 == 1)) {
        out.push_back({p1, q1});
        long long k = (q0 + d) / q1;
        long long p2 = k * p1 - p0;
        long long q2 = k * q1 - q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    out.push_back({1, 1});
    return out;
}

long long farey_size(int d) {
    if (d < 1) throw std::invalid_argument("farey_size: d must be >= 1");
    std::vector<int> phi(static_cast<size_t>(d) + 1);
    std::iota(phi.begin(), phi.end(), 0);
    for (int i = 2; i <= d; ++i) {
        if (phi[i] == i) {  // i is prime
            for (int m = i; m <= d; m += i) phi[m] -= phi[m] / i;
        }
    }
    long long total = 1;
    for (int i = 1; i <= d; ++i) total += phi[i];
    return total;
}

int select_d_for(long long k) {
    if (k < 1) throw std::invalid_argument("select_d_for: k must be >= 1");
    const double pi = std::numbers::pi;
    int d = static_cast<int>(std::ceil(pi * pi * std::sqrt(static_cast<double>(k)) / 3.0));
    if (d < 1) d = 1;
    while (farey_size(d) < k) ++d;
    return d;
}

bool verify_neighbor_identity(const VectorSet& vs) {
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        // (p,q) then (r,s): q*r - p*s == 1
        if (cross(vs[i + 1], vs[i]) != 1) return false;
    }
    return true;
}

Vec2i map_to_cone(Vec2i v, Cone cone) {
    if (!(v.x >= 0 && v.y >= 1 && v.x <= v.y))
        throw std::invalid_argument("map_to_cone: vector outside source cone");
    switch (cone) {
        case Cone::c1: return {v.y, v.x};
        case Cone::c2: return {-v.y, v.x};
        case Cone::c3: return {v.x, -v.y};
    }
    throw std::logic_error("map_to_cone: bad cone");
}

VectorSet map_to_cone(const VectorSet& vs, Cone cone) {
    VectorSet out;
    out.reserve(vs.size());
    for (const Vec2i& v : vs) out.push_back(map_to_cone(v, cone));
    return out;
}

VectorSet octant_fill(const VectorSet& vs) {
    VectorSet out;
    out.reserve(vs.size() * 8);
    for (const Vec2i& v : vs) {
        if (!(v.x >= 0 && v.y >= 1 && v.x <= v.y))
            throw std::invalid_argument("octant_fill: vector outside source cone");
        const i64 x = v.x, y = v.y;
        out.push_back({x, y});
        out.push_back({y, x});
        out.push_back({-x, y});
        out.push_back({-y, x});
        out.push_back({x, -y});
        out.push_back({y, -x});
        out.push_back({-x, -y});
        out.push_back({-y, -x});
    }
    std::sort(out.begin(), out.end(), dir_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MinAnglePair min_pairwise_angle(const VectorSet& vs) {
    if (vs.size() < 2)
        throw std::invalid_argument("min_pairwise_angle: need at least two vectors");
    VectorSet s = vs;
    std::sort(s.begin(), s.end(), dir_less);
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (same_direction(s[i], s[i + 1]))
            throw std::invalid_argument("min_pairwise_angle: duplicate direction");
    }
    // The minimizing pair is circularly consecutive in angular order: any
    // vector strictly inside the short arc of a pair would form a smaller
    // angle with either end.
    size_t best_i = 0;
    AngleMag best = angle_mag(s[0], s[1 % s.size()]);
    for (size_t i = 1; i < s.size(); ++i) {
        const size_t j = (i + 1) % s.size();
        AngleMag cand = angle_mag(s[i], s[j]);
        if (angle_mag_less(cand, best)) {
            best = cand;
            best_i = i;
        }
    }
    const Vec2i a = s[best_i];
    const Vec2i b = s[(best_i + 1) % s.size()];
    return {angle_mag_radians(angle_mag(a, b)), a, b};
}

double fan_angle_lower_bound(long long pool, long long k) {
    if (pool < 1 || k < 1) throw std::invalid_argument("fan_angle_lower_bound: bad sizes");
    const double pi = std::numbers::pi;
    const double ck = static_cast<double>(pool);  // pool = c * k by definition
    (void)k;
    return 3.0 / (2.0 * pi * pi * ck) - 9.0 / (4.0 * pi * pi * pi * pi * ck * ck);
}

}  // namespace monodraw
