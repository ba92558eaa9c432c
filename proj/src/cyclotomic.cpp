#include "zpg/cyclotomic.hpp"

#include <numeric>

#include "zpg/error.hpp"

namespace zpg {

uint32_t euler_phi(uint32_t n) {
    uint32_t result = n;
    for (uint32_t q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

Cyclotomic::Cyclotomic(uint32_t conductor) : n_(conductor) {
    if (n_ == 0) throw DomainMismatch("cyclotomic conductor must be positive");
    c_.assign(euler_phi(n_), Rational(0));
}

Cyclotomic::Cyclotomic(uint32_t conductor, const Rational& rational) : Cyclotomic(conductor) {
    c_[0] = rational;
}

static std::vector<Rational> reduce_mod_phi(uint32_t n, PolyQ raw) {
    const PolyQ& phi = cyclotomic_polynomial(n);
    PolyQ rem = polyq_divmod(std::move(raw), phi).second;
    rem.resize(euler_phi(n), Rational(0));
    return rem;
}

Cyclotomic Cyclotomic::zeta_power(uint32_t conductor, int64_t exponent) {
    return from_terms(conductor, {{exponent, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(uint32_t conductor,
                                  const std::vector<std::pair<int64_t, Rational>>& terms) {
    Cyclotomic out(conductor);
    PolyQ raw(conductor, Rational(0));
    int64_t n = conductor;
    for (const auto& [e, q] : terms) {
        int64_t ee = ((e % n) + n) % n;
        raw[ee] += q;
    }
    out.c_ = reduce_mod_phi(conductor, polyq_trim(std::move(raw)));
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw SemanticError("cyclotomic value is not rational: " + str());
    return c_[0];
}

static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) throw DomainMismatch("cyclotomic conductor mismatch");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic out(a.conductor());
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic out(a.conductor());
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    Cyclotomic out(a.conductor());
    PolyQ pa(a.c_.begin(), a.c_.end()), pb(b.c_.begin(), b.c_.end());
    out.c_ = reduce_mod_phi(a.conductor(), polyq_mul(polyq_trim(std::move(pa)), polyq_trim(std::move(pb))));
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

Cyclotomic Cyclotomic::scaled_by(const Rational& c) const {
    Cyclotomic out(n_);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * c;
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw SemanticError("inverse of zero cyclotomic");
    PolyQ me(c_.begin(), c_.end());
    auto inv = polyq_invmod(polyq_trim(std::move(me)), cyclotomic_polynomial(n_));
    if (!inv) throw SemanticError("cyclotomic inverse does not exist");  // cannot happen mod irreducible
    Cyclotomic out(n_);
    out.c_ = reduce_mod_phi(n_, std::move(*inv));
    return out;
}

Cyclotomic Cyclotomic::sigma(int64_t k) const {
    int64_t n = n_;
    int64_t kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1)
        throw NotCoprime("galois exponent " + std::to_string(k) + " not coprime to conductor " + std::to_string(n_));
    std::vector<std::pair<int64_t, Rational>> terms;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) terms.emplace_back(static_cast<int64_t>(i) * kk, c_[i]);
    return from_terms(n_, terms);
}

Cyclotomic Cyclotomic::embed(uint32_t big_conductor) const {
    if (big_conductor % n_ != 0)
        throw DomainMismatch("cannot embed conductor " + std::to_string(n_) +
                             " into " + std::to_string(big_conductor));
    uint32_t scale = big_conductor / n_;
    std::vector<std::pair<int64_t, Rational>> terms;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) terms.emplace_back(static_cast<int64_t>(i) * scale, c_[i]);
    return from_terms(big_conductor, terms);
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        bool neg = v < 0;
        if (neg) v = -v;
        if (out.empty()) { if (neg) out += "-"; }
        else out += neg ? "-" : "+";
        bool need_coeff = (i == 0) || v != 1;
        if (need_coeff) out += rational_str(v);
        if (i >= 1) {
            if (need_coeff) out += "*";
            out += "z" + std::to_string(n_);
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<std::pair<uint32_t, Rational>> Cyclotomic::terms() const {
    std::vector<std::pair<uint32_t, Rational>> out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(static_cast<uint32_t>(i), c_[i]);
    return out;
}

bool Cyclotomic::lex_less(const Cyclotomic& a, const Cyclotomic& b) {
    check_same(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

} // namespace zpg
