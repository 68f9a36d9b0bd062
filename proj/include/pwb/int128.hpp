#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// Exact arithmetic for counting sequences. Desk-scale partition counts fit
// easily in 128 bits (p(n) stays below 2^63 only up to n ~ 410); overflow is
// checked, never silent.

namespace pwb {

using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("int128 addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("int128 subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("int128 multiplication overflow");
    return r;
}

inline std::string to_string(int128 v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    // The minimum value negates fine via unsigned arithmetic.
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg)
        digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

inline bool fits_int64(int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

} // namespace pwb
