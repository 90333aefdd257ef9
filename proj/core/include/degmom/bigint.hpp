#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace degmom {

// Exact integer type for moment sums. d^s and especially d^(2s-1) overflow
// 64 bits at modest n and s, so every quantity that feeds a theorem check
// is kept exact.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
    return boost::multiprecision::pow(BigInt(base), exp);
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }

inline long double to_long_double(const BigInt& x) {
    return x.convert_to<long double>();
}

// Integer power in double arithmetic; exact while the result stays under 2^53.
inline double ipow(double base, unsigned exp) {
    double r = 1.0;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace degmom
