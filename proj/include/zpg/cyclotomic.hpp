#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "zpg/polyq.hpp"
#include "zpg/rational.hpp"

namespace zpg {

// An element of the cyclotomic field Q(zeta_n), stored on the power basis
// zeta^0, ..., zeta^(phi(n)-1) modulo the n-th cyclotomic polynomial.  The
// representation is canonical, so == is exact equality in the field.
class Cyclotomic {
public:
    explicit Cyclotomic(uint32_t conductor);                      // zero
    Cyclotomic(uint32_t conductor, const Rational& rational);
    // zeta_n^exponent (exponent arbitrary, reduced mod n).
    static Cyclotomic zeta_power(uint32_t conductor, int64_t exponent);
    // Sum of terms coeff * zeta^exp.
    static Cyclotomic from_terms(uint32_t conductor,
                                 const std::vector<std::pair<int64_t, Rational>>& terms);

    uint32_t conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;   // throws SemanticError unless is_rational()

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic scaled_by(const Rational& c) const;
    Cyclotomic inverse() const;       // throws SemanticError on zero
    bool operator==(const Cyclotomic&) const = default;

    // Galois action sigma_k : zeta -> zeta^k, for gcd(k, n) = 1 (else NotCoprime).
    Cyclotomic sigma(int64_t k) const;
    // Rewrite in Q(zeta_N) for a conductor N with n | N (index scaling).
    Cyclotomic embed(uint32_t big_conductor) const;

    std::string str() const;          // human-readable, e.g. "1/2-z30^6"
    // Sparse (exponent, coefficient) view of the stored power basis.
    std::vector<std::pair<uint32_t, Rational>> terms() const;

    // Total order on elements of a common conductor (coefficient-wise
    // lexicographic); used only to sort deterministically.
    static bool lex_less(const Cyclotomic& a, const Cyclotomic& b);

private:
    uint32_t n_;
    std::vector<Rational> c_;   // length phi(n)
};

uint32_t euler_phi(uint32_t n);

} // namespace zpg
