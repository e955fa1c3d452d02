#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gapwords {

// Exact integer type used for gap values, one-positions and complexity
// values. Exponential gap rules overflow 64 bits near index 64, and word
// positions are the quantities of interest, so everything stays exact.
using Int = boost::multiprecision::cpp_int;

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

inline std::uint64_t to_u64(const Int& v, const char* what = "value") {
    if (v < 0 || v > Int(UINT64_MAX))
        throw std::overflow_error(std::string(what) + " out of uint64 range");
    return static_cast<std::uint64_t>(v);
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace gapwords
