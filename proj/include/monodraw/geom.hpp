#pragma once
// Plane-geometry primitives shared by the drawing algorithms and the
// verifier: integer/real 2-d vectors, exact sign predicates built on
// 128-bit products, and exact comparison of angle magnitudes.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace monodraw {

using i64 = long long;
using i128 = __int128;
using int256 = boost::multiprecision::int256_t;

template <typename T>
struct Vec2 {
    T x{};
    T y{};

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
};

using Vec2i = Vec2<i64>;
using Vec2r = Vec2<long double>;

inline Vec2r to_real(Vec2i v) { return {(long double)v.x, (long double)v.y}; }

// ---- exact integer predicates ------------------------------------------

inline i128 cross(Vec2i a, Vec2i b) { return (i128)a.x * b.y - (i128)a.y * b.x; }
inline i128 dot(Vec2i a, Vec2i b) { return (i128)a.x * b.x + (i128)a.y * b.y; }

inline int sgn(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
inline int sgn(long double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

inline int sign_cross(Vec2i a, Vec2i b) { return sgn(cross(a, b)); }
inline int sign_dot(Vec2i a, Vec2i b) { return sgn(dot(a, b)); }

// Half-plane index used to order directions counterclockwise starting at
// the positive x-axis: 0 for y > 0 or (y == 0, x > 0), 1 for the rest.
inline int dir_half(Vec2i v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

// Strict counterclockwise ordering of nonzero directions from angle 0.
inline bool dir_less(Vec2i a, Vec2i b) {
    int ha = dir_half(a), hb = dir_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

// True when a and b point in exactly the same direction.
inline bool same_direction(Vec2i a, Vec2i b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

// Unsigned angle between two vectors, encoded for exact comparison as the
// pair (|cross|, dot); the angle lives in [0, pi].
struct AngleMag {
    i128 abs_cross;
    i128 dot;
};

inline AngleMag angle_mag(Vec2i a, Vec2i b) {
    i128 c = cross(a, b);
    return {c < 0 ? -c : c, dot(a, b)};
}

// Exact "angle(a) < angle(b)" on [0, pi].  Both angles are classified by
// the sign of the dot product; within a quadrant class tan (or cot) is
// compared via cross-multiplication in 256-bit arithmetic.
inline bool angle_mag_less(const AngleMag& a, const AngleMag& b) {
    int ca = a.dot > 0 ? 0 : a.dot == 0 ? 1 : 2;  // [0,pi/2), pi/2, (pi/2,pi]
    int cb = b.dot > 0 ? 0 : b.dot == 0 ? 1 : 2;
    if (ca != cb) return ca < cb;
    if (ca == 1) return false;
    int256 lhs = int256(a.abs_cross) * int256(cb == 0 ? b.dot : -b.dot);
    int256 rhs = int256(b.abs_cross) * int256(ca == 0 ? a.dot : -a.dot);
    // First quadrant: smaller tan = smaller angle.  Second: larger |tan|
    // (of the supplement) = smaller supplement = larger angle, reversed.
    return ca == 0 ? lhs < rhs : lhs > rhs;
}

inline double angle_mag_radians(const AngleMag& a) {
    return std::atan2((double)(long double)a.abs_cross, (double)(long double)a.dot);
}

// ---- real predicates with a relative epsilon band -----------------------

inline long double cross(Vec2r a, Vec2r b) { return a.x * b.y - a.y * b.x; }
inline long double dot(Vec2r a, Vec2r b) { return a.x * b.x + a.y * b.y; }
inline long double norm(Vec2r a) { return std::sqrt(a.x * a.x + a.y * a.y); }

// Sign with |v| <= eps * scale collapsed to zero.
inline int sign_eps(long double v, long double scale, long double eps) {
    if (v > eps * scale) return 1;
    if (v < -eps * scale) return -1;
    return 0;
}

inline std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace monodraw
