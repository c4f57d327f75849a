/**
 * @file combinatorics.hpp
 * @brief Exact counting functions used throughout: arrangements, binomials, Gaussian binomials.
 *
 * All arithmetic is unsigned 64-bit and overflow-checked; nothing here uses floating point.
 */
#pragma once

#include <cstdint>
#include <stdexcept>

namespace symcode {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in exact count");
    return r;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in exact count");
    return r;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

/// Number of arrangements of r objects out of n: n!/(n-r)!, and 0 when r > n.
inline std::uint64_t perm_count(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0) throw std::invalid_argument("perm_count needs n, r >= 0");
    if (r > n) return 0;
    std::uint64_t result = 1;
    for (std::int64_t i = 0; i < r; ++i) result = checked_mul(result, static_cast<std::uint64_t>(n - i));
    return result;
}

inline std::uint64_t factorial(unsigned n) { return perm_count(n, n); }

/// C(n, r); 0 when r < 0 or r > n.
inline std::uint64_t binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // result * (n - r + i) is divisible by i at every step
        result = checked_mul(result, static_cast<std::uint64_t>(n - r + i)) / static_cast<std::uint64_t>(i);
    }
    return result;
}

/// Number of r-dimensional subspaces of F_q^k.
inline std::uint64_t gaussian_binomial(unsigned k, unsigned r, std::uint64_t q) {
    if (r > k) return 0;
    std::uint64_t num = 1, den = 1;
    for (unsigned i = 0; i < r; ++i) {
        num = checked_mul(num, ipow(q, k - i) - 1);
        den = checked_mul(den, ipow(q, i + 1) - 1);
    }
    return num / den;
}

}  // namespace symcode
