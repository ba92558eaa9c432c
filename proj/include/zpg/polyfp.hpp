#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace zpg {

// Dense univariate polynomial over the prime field F_p; coefficient i is the
// z^i coefficient, normalized to [0, p), no trailing zeros.
struct PolyFp {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    PolyFp() = default;
    PolyFp(uint64_t prime, std::vector<uint64_t> coeffs);
    static PolyFp zero(uint64_t p) { return PolyFp(p, {}); }
    static PolyFp one(uint64_t p) { return PolyFp(p, {1}); }
    static PolyFp xn_minus_1(uint64_t p, uint32_t n);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool monic() const { return !c.empty() && c.back() == 1; }
    uint64_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }
    bool operator==(const PolyFp&) const = default;
    std::string str() const;   // e.g. "z^2+z+1"
};

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t fp_inv(uint64_t a, uint64_t p);

PolyFp polyfp_add(const PolyFp& a, const PolyFp& b);
PolyFp polyfp_sub(const PolyFp& a, const PolyFp& b);
PolyFp polyfp_mul(const PolyFp& a, const PolyFp& b);
std::pair<PolyFp, PolyFp> polyfp_divmod(const PolyFp& a, const PolyFp& b);
PolyFp polyfp_gcd(PolyFp a, PolyFp b);             // monic
PolyFp polyfp_derivative(const PolyFp& a);
PolyFp polyfp_powmod(const PolyFp& a, const mpz_class& e, const PolyFp& m);
PolyFp polyfp_make_monic(PolyFp a);

// Irreducible factors with multiplicities, sorted by (degree, coefficients).
// The equal-degree splitting stage is randomized and driven by the seed, but
// the returned list is the same for every seed.
std::vector<std::pair<PolyFp, uint32_t>> factor_poly_fp(const PolyFp& f, uint64_t seed = 0);

bool polyfp_irreducible(const PolyFp& f);

} // namespace zpg
