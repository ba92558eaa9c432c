#include "zpg/residue.hpp"

namespace zpg {

std::optional<Rational> rat_reconstruct(const Residue& r) {
    const mpz_class& m = r.modulus;
    // bound B = floor(sqrt(m/2)): |numerator|, denominator <= B makes the
    // solution unique when one exists.
    mpz_class B;
    mpz_class half = m / 2;
    mpz_sqrt(B.get_mpz_t(), half.get_mpz_t());
    if (B == 0) return std::nullopt;

    // Half-extended Euclid on (m, v): r_i = s_i*m + t_i*v; every step gives the
    // candidate r_i / t_i.
    mpz_class r0 = m, r1 = r.value;
    mpz_class t0 = 0, t1 = 1;
    std::optional<Rational> best;
    auto consider = [&](const mpz_class& num_signed, const mpz_class& den_signed) {
        if (den_signed == 0) return;
        mpz_class num = num_signed, den = den_signed;
        if (den < 0) { den = -den; num = -num; }
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g > 1) { num /= g; den /= g; }
        mpz_class abs_num = abs(num);
        if (abs_num > B || den > B) return;
        mpz_class gm;
        mpz_gcd(gm.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        if (gm != 1) return;
        // verify num = value * den mod m
        mpz_class chk = (r.value * den - num) % m;
        if (chk != 0) return;
        Rational cand(num, den);
        cand.canonicalize();
        if (!best) { best = cand; return; }
        mpz_class mass_new = abs_num * den;
        mpz_class mass_old = abs(best->get_num()) * best->get_den();
        if (mass_new < mass_old) best = cand;
    };

    consider(r1, t1);
    while (r1 != 0) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
        consider(r1, t1);
    }
    return best;
}

} // namespace zpg
