#pragma once
// Wide binary floating point for the disk construction, whose feature sizes
// shrink roughly like C^(2^depth): hardware floats merge vertices around
// depth 7, while 4096-bit arithmetic holds distinct coordinates (and
// perpendicular-foot parameters) up to depth ~11.

#include "monodraw/geom.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace monodraw {

inline constexpr int big_bits = 4096;

using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<big_bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using Vec2b = Vec2<BigReal>;

inline BigReal cross(const Vec2b& a, const Vec2b& b) { return a.x * b.y - a.y * b.x; }
inline BigReal dot(const Vec2b& a, const Vec2b& b) { return a.x * b.x + a.y * b.y; }

// Rounding to long double keeps the full exponent range, so even the tiny
// deep-level differences survive as long as they are formed at full
// precision first and rounded only once.
inline long double narrow(const BigReal& x) { return x.convert_to<long double>(); }
inline Vec2r narrow(const Vec2b& v) { return {narrow(v.x), narrow(v.y)}; }

}  // namespace monodraw
