#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace tamefiber {

using Int = std::int64_t;

inline bool is_prime(Int n) noexcept {
    if (n < 2) return false;
    for (Int q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

/// Residue characteristic is 0 or a prime.
inline bool is_valid_residue_char(Int p) noexcept { return p == 0 || is_prime(p); }

/// Largest divisor of n not divisible by p (n itself when p == 0).
inline Int prime_to_p_part(Int n, Int p) noexcept {
    if (p == 0) return n;
    while (n % p == 0) n /= p;
    return n;
}

/// True iff n == p^a for some a >= 1. Always false for p == 0 and for n == 1.
inline bool is_positive_power_of(Int n, Int p) noexcept {
    if (p < 2 || n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

inline bool coprime_to_char(Int d, Int p) noexcept { return p == 0 || d % p != 0; }

inline Int lcm_of(const std::vector<Int>& values) {
    Int acc = 1;
    for (Int v : values) acc = std::lcm(acc, v);
    return acc;
}

inline std::vector<Int> divisors(Int n) {
    std::vector<Int> small, large;
    for (Int q = 1; q * q <= n; ++q) {
        if (n % q != 0) continue;
        small.push_back(q);
        if (q != n / q) large.push_back(n / q);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Int euler_phi(Int n) noexcept {
    Int result = n;
    for (Int q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace tamefiber
