#pragma once
#include <gmpxx.h>

#include <optional>

#include "zpg/error.hpp"
#include "zpg/rational.hpp"

namespace zpg {

// An element of Z/m for a prime power m = p^k, normalized to [0, m).
struct Residue {
    mpz_class value;
    mpz_class modulus;

    Residue(mpz_class v, mpz_class m) : value(std::move(v)), modulus(std::move(m)) {
        if (modulus <= 0) throw DomainMismatch("residue modulus must be positive");
        value %= modulus;
        if (value < 0) value += modulus;
    }

    friend Residue operator+(const Residue& a, const Residue& b) {
        check(a, b);
        return Residue(a.value + b.value, a.modulus);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        check(a, b);
        return Residue(a.value - b.value, a.modulus);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        check(a, b);
        return Residue(a.value * b.value, a.modulus);
    }
    Residue inverse() const {
        mpz_class r;
        if (!mpz_invert(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()))
            throw NotCoprime("residue not invertible");
        return Residue(r, modulus);
    }
    bool operator==(const Residue& other) const {
        return modulus == other.modulus && value == other.value;
    }

private:
    static void check(const Residue& a, const Residue& b) {
        if (a.modulus != b.modulus) throw DomainMismatch("residue modulus mismatch");
    }
};

// Rational reconstruction: the unique a/b with a = r.value * b (mod modulus),
// gcd(a,b) = 1, b > 0 coprime to the modulus, and |a|, b <= sqrt(modulus/2);
// among Euclid candidates in that box the one with minimal |a|*b is returned.
// nullopt when no candidate qualifies.
std::optional<Rational> rat_reconstruct(const Residue& r);

} // namespace zpg
