#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hmg {

// All linear algebra in this project is exact. Entries are 64-bit integers
// with overflow detection: an overflow throws instead of silently wrapping,
// so a completed computation is always correct.
using Int = long long;

struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

inline Int gcd_nonneg(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

}  // namespace hmg
