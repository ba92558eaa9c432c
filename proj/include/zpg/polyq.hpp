#pragma once
#include <optional>
#include <vector>

#include "zpg/rational.hpp"

namespace zpg {

// Dense univariate polynomial over Q, coefficient i is the z^i coefficient;
// no trailing zeros (the zero polynomial is the empty vector).
using PolyQ = std::vector<Rational>;

PolyQ polyq_trim(PolyQ f);
int polyq_deg(const PolyQ& f);               // -1 for the zero polynomial
PolyQ polyq_add(const PolyQ& a, const PolyQ& b);
PolyQ polyq_sub(const PolyQ& a, const PolyQ& b);
PolyQ polyq_mul(const PolyQ& a, const PolyQ& b);
PolyQ polyq_scale(const PolyQ& a, const Rational& c);
// Quotient and remainder by a nonzero divisor.
std::pair<PolyQ, PolyQ> polyq_divmod(const PolyQ& a, const PolyQ& b);
// True iff b divides a exactly.
bool polyq_divides(const PolyQ& b, const PolyQ& a);
// Monic gcd.
PolyQ polyq_gcd(PolyQ a, PolyQ b);
// u with u*a = 1 mod m (a invertible mod m); nullopt when gcd(a, m) != 1.
std::optional<PolyQ> polyq_invmod(const PolyQ& a, const PolyQ& m);

// z^n - 1 and the n-th cyclotomic polynomial (integer coefficients).
PolyQ polyq_xn_minus_1(uint32_t n);
const PolyQ& cyclotomic_polynomial(uint32_t n);

} // namespace zpg

#include "zpg/polyfp.hpp"

namespace zpg {

PolyFp polyq_reduce_mod_p(const PolyQ& f, uint64_t p);

// Quadratic Hensel lifting of a monic irreducible factor g of (f mod p) up to
// precision p^K, followed by rational reconstruction of the coefficients.
// Returns the reconstructed polynomial only if it is monic with p-integral
// coefficients and divides f exactly over Q; otherwise nullopt.  Throws
// NotSquarefree when g shares a root with its cofactor mod p.
std::optional<PolyQ> hensel_lift_poly_factor(const PolyQ& f, const PolyFp& g,
                                             uint64_t p, uint32_t K);

} // namespace zpg
