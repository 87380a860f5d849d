#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <tuple>

namespace homrep {

// All lattice and series arithmetic runs over arbitrary-precision integers;
// pivot growth in exact elimination rules out fixed-width types.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// g = gcd(a, b) >= 0 together with x, y such that x*a + y*b = g.
inline std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

}  // namespace homrep
