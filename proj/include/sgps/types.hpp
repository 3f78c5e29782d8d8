#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sgps/error.hpp"

namespace sgps {

/// Machine integer used for semigroup elements. Arithmetic that can leave the
/// range goes through the checked helpers below and raises Overflow.
using Int = std::int64_t;
using Rational = boost::rational<Int>;
using IntList = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
    return r;
}

/// Largest window (in integers) the library will materialize as a dense table.
inline constexpr Int kMaxWindow = Int{1} << 26;

inline void require_window(Int size, const char* what) {
    if (size < 0 || size > kMaxWindow)
        fail(ErrorKind::ResourceLimit, std::string(what) + " exceeds the supported window size");
}

/// Floor division and nonnegative remainder.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int pos_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace sgps
