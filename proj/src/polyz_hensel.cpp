#include <algorithm>
#include <vector>

#include "zpg/error.hpp"
#include "zpg/polyq.hpp"
#include "zpg/residue.hpp"

namespace zpg {

namespace {

// Dense polynomials over Z/m, m a prime power; plain vectors normalized to
// [0, m) with no trailing zeros.
using PolyZ = std::vector<mpz_class>;

PolyZ trim(PolyZ f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PolyZ add(const PolyZ& a, const PolyZ& b, const mpz_class& m) {
    PolyZ out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) { out[i] += b[i]; out[i] %= m; }
    return trim(std::move(out));
}

PolyZ sub(const PolyZ& a, const PolyZ& b, const mpz_class& m) {
    PolyZ out(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) { out[i] -= b[i]; out[i] %= m; if (out[i] < 0) out[i] += m; }
    return trim(std::move(out));
}

PolyZ mul(const PolyZ& a, const PolyZ& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    PolyZ out(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    for (auto& x : out) { x %= m; if (x < 0) x += m; }
    return trim(std::move(out));
}

// Division by a monic divisor.
std::pair<PolyZ, PolyZ> divmod_monic(const PolyZ& a, const PolyZ& b, const mpz_class& m) {
    PolyZ rem = a, quot;
    int db = static_cast<int>(b.size()) - 1;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quot.assign(dr - db + 1, mpz_class(0));
    while (dr >= db) {
        mpz_class coef = rem[dr];
        if (coef != 0) {
            quot[dr - db] = coef;
            for (int i = 0; i <= db; ++i) {
                rem[dr - db + i] -= coef * b[i];
                rem[dr - db + i] %= m;
                if (rem[dr - db + i] < 0) rem[dr - db + i] += m;
            }
        }
        --dr;
        while (dr >= db && rem[dr] == 0) --dr;
    }
    rem.resize(static_cast<size_t>(std::max(dr + 1, 0)));
    return {trim(std::move(quot)), std::move(rem)};
}

PolyZ from_fp(const PolyFp& f) {
    PolyZ out(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) out[i] = mpz_class(static_cast<unsigned long>(f.c[i]));
    return out;
}

} // namespace

PolyFp polyq_reduce_mod_p(const PolyQ& f, uint64_t p) {
    std::vector<uint64_t> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = reduce_mod_p(f[i], p);
    return PolyFp(p, std::move(c));
}

std::optional<PolyQ> hensel_lift_poly_factor(const PolyQ& f, const PolyFp& g,
                                             uint64_t p, uint32_t K) {
    if (f.empty() || f.back() != 1) throw SemanticError("hensel lifting requires a monic target");
    if (!g.monic() || g.deg() < 1) throw SemanticError("hensel lifting requires a monic factor");
    PolyFp f_bar = polyq_reduce_mod_p(f, p);
    auto [h_bar, rem] = polyfp_divmod(f_bar, g);
    if (!rem.is_zero()) throw SemanticError("not a factor mod p: " + g.str());
    PolyFp common = polyfp_gcd(g, h_bar);
    if (common.deg() != 0)
        throw NotSquarefree("factor and cofactor share a root mod " + std::to_string(p));

    // Bezout s*g + t*h = 1 over F_p via extended Euclid.
    PolyFp r0 = g, r1 = h_bar;
    PolyFp s0 = PolyFp::one(p), s1 = PolyFp::zero(p);
    PolyFp t0 = PolyFp::zero(p), t1 = PolyFp::one(p);
    while (!r1.is_zero()) {
        auto [q, r2] = polyfp_divmod(r0, r1);
        PolyFp s2 = polyfp_sub(s0, polyfp_mul(q, s1));
        PolyFp t2 = polyfp_sub(t0, polyfp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // r0 is a nonzero constant; normalize.
    uint64_t unit_inv = fp_inv(r0.c[0], p);
    for (auto& x : s0.c) x = fp_mul(x, unit_inv, p);
    for (auto& x : t0.c) x = fp_mul(x, unit_inv, p);

    mpz_class m(static_cast<unsigned long>(p));
    mpz_class target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(p), K);
    PolyZ G = from_fp(g), H = from_fp(h_bar), S = from_fp(s0), T = from_fp(t0);

    // f with coefficients as residues (denominators prime to p by assumption).
    auto f_mod = [&](const mpz_class& modulus) {
        PolyZ out(f.size());
        for (size_t i = 0; i < f.size(); ++i) out[i] = reduce_mod(f[i], modulus);
        return trim(std::move(out));
    };

    while (m < target) {
        mpz_class m2 = m * m;
        PolyZ F = f_mod(m2);
        // e = f - G*H; then G += T*e + q*G, H += r  where  S*e = q*H + r.
        PolyZ e = sub(F, mul(G, H, m2), m2);
        auto [q, r] = divmod_monic(mul(S, e, m2), H, m2);
        G = add(G, add(mul(T, e, m2), mul(q, G, m2), m2), m2);
        H = add(H, r, m2);
        // refresh the Bezout pair:  b = S*G + T*H - 1;  S -= d, T -= T*b + c*G
        // where S*b = c*H + d.
        PolyZ one{mpz_class(1)};
        PolyZ b = sub(add(mul(S, G, m2), mul(T, H, m2), m2), one, m2);
        auto [c, d] = divmod_monic(mul(S, b, m2), H, m2);
        S = sub(S, d, m2);
        T = sub(T, add(mul(T, b, m2), mul(c, G, m2), m2), m2);
        m = m2;
    }

    // Reconstruct each coefficient of G; the candidate must divide f over Q.
    PolyQ cand(G.size(), Rational(0));
    for (size_t i = 0; i < G.size(); ++i) {
        auto rec = rat_reconstruct(Residue(G[i], m));
        if (!rec) return std::nullopt;
        cand[i] = *rec;
    }
    cand = polyq_trim(std::move(cand));
    if (cand.empty() || cand.back() != 1) return std::nullopt;
    for (const auto& coef : cand)
        if (!is_p_integral(coef, p)) return std::nullopt;
    if (!polyq_divides(cand, f)) return std::nullopt;
    return cand;
}

} // namespace zpg
