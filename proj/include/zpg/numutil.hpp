#pragma once
#include <cstdint>
#include <numeric>
#include <vector>

#include "zpg/error.hpp"

namespace zpg {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n % d == 0) return n == d;
    }
    for (uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<uint64_t> divisors_of(uint64_t n) {
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline uint64_t euler_phi(uint64_t n) {
    uint64_t result = n, m = n;
    for (uint64_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            result -= result / q;
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
inline uint64_t multiplicative_order(uint64_t a, uint64_t n) {
    if (n == 1) return 1;
    a %= n;
    if (std::gcd(a, n) != 1) throw NotCoprime("order of a non-unit");
    uint64_t ord = 1, x = a;
    while (x != 1) {
        x = (x * a) % n;
        ++ord;
        if (ord > n) throw SemanticError("order computation runaway");
    }
    return ord;
}

// Largest divisor of n coprime to p (the p'-part of n).
inline uint64_t coprime_part(uint64_t n, uint64_t p) {
    while (n % p == 0) n /= p;
    return n;
}

} // namespace zpg
