#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zpg {

// Arbitrary-precision rationals, kept canonical (reduced, positive
// denominator) by GMP itself.
using Rational = mpq_class;

// Parse "a/b" or "a"; throws SchemaError on malformed input.
Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);

// True when the denominator is coprime to p, i.e. q lies in the p-local
// subring Z_(p) of Q.
bool is_p_integral(const Rational& q, uint64_t p);

// Residue of a p-integral rational mod p (0 <= result < p).
uint64_t reduce_mod_p(const Rational& q, uint64_t p);

// Residue of a p-integral rational modulo the prime power m (num * den^-1).
mpz_class reduce_mod(const Rational& q, const mpz_class& m);

} // namespace zpg
