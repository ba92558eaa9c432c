#include "zpg/polyfp.hpp"

#include <algorithm>
#include <random>

#include "zpg/error.hpp"

namespace zpg {

uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) { uint64_t s = a + b; return s >= p ? s - p : s; }
uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}
uint64_t fp_inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw NotCoprime("inverse of zero mod p");
    return fp_pow(a % p, p - 2, p);
}

PolyFp::PolyFp(uint64_t prime, std::vector<uint64_t> coeffs) : p(prime), c(std::move(coeffs)) {
    if (p < 2) throw DomainMismatch("polynomial modulus must be a prime >= 2");
    for (auto& x : c) x %= p;
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyFp PolyFp::xn_minus_1(uint64_t p, uint32_t n) {
    std::vector<uint64_t> coeffs(n + 1, 0);
    coeffs[0] = p - 1;
    coeffs[n] = 1;
    return PolyFp(p, std::move(coeffs));
}

std::string PolyFp::str() const {
    if (c.empty()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
        if (i >= 1) {
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

static void check_same_field(const PolyFp& a, const PolyFp& b) {
    if (a.p != b.p) throw DomainMismatch("polynomials over different prime fields");
}

PolyFp polyfp_add(const PolyFp& a, const PolyFp& b) {
    check_same_field(a, b);
    std::vector<uint64_t> out(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = fp_add(a.coeff(i), b.coeff(i), a.p);
    return PolyFp(a.p, std::move(out));
}

PolyFp polyfp_sub(const PolyFp& a, const PolyFp& b) {
    check_same_field(a, b);
    std::vector<uint64_t> out(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = fp_sub(a.coeff(i), b.coeff(i), a.p);
    return PolyFp(a.p, std::move(out));
}

PolyFp polyfp_mul(const PolyFp& a, const PolyFp& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return PolyFp::zero(a.p);
    std::vector<uint64_t> out(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = fp_add(out[i + j], fp_mul(a.c[i], b.c[j], a.p), a.p);
    }
    return PolyFp(a.p, std::move(out));
}

std::pair<PolyFp, PolyFp> polyfp_divmod(const PolyFp& a, const PolyFp& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw SemanticError("polynomial division by zero");
    std::vector<uint64_t> rem = a.c, quot;
    int db = b.deg();
    if (a.deg() >= db) quot.assign(a.deg() - db + 1, 0);
    uint64_t lead_inv = fp_inv(b.c.back(), a.p);
    int dr = a.deg();
    while (dr >= db) {
        uint64_t coef = fp_mul(rem[dr], lead_inv, a.p);
        if (coef != 0) {
            quot[dr - db] = coef;
            for (int i = 0; i <= db; ++i)
                rem[dr - db + i] = fp_sub(rem[dr - db + i], fp_mul(coef, b.c[i], a.p), a.p);
        }
        --dr;
        while (dr >= db && rem[dr] == 0) --dr;
    }
    rem.resize(static_cast<size_t>(std::max(dr + 1, 0)));
    return {PolyFp(a.p, std::move(quot)), PolyFp(a.p, std::move(rem))};
}

PolyFp polyfp_make_monic(PolyFp a) {
    if (a.is_zero() || a.c.back() == 1) return a;
    uint64_t inv = fp_inv(a.c.back(), a.p);
    for (auto& x : a.c) x = fp_mul(x, inv, a.p);
    return a;
}

PolyFp polyfp_gcd(PolyFp a, PolyFp b) {
    check_same_field(a, b);
    while (!b.is_zero()) {
        PolyFp r = polyfp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return polyfp_make_monic(std::move(a));
}

PolyFp polyfp_derivative(const PolyFp& a) {
    if (a.deg() <= 0) return PolyFp::zero(a.p);
    std::vector<uint64_t> out(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) out[i - 1] = fp_mul(a.c[i], i % a.p, a.p);
    return PolyFp(a.p, std::move(out));
}

PolyFp polyfp_powmod(const PolyFp& a, const mpz_class& e, const PolyFp& m) {
    PolyFp base = polyfp_divmod(a, m).second;
    PolyFp r = PolyFp::one(a.p);
    mpz_class exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            r = polyfp_divmod(polyfp_mul(r, base), m).second;
        base = polyfp_divmod(polyfp_mul(base, base), m).second;
        exp >>= 1;
    }
    return r;
}

namespace {

// Deterministic 64-bit generator; distribution code is hand-rolled so results
// do not depend on the standard library implementation.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t below(uint64_t n) {  // uniform in [0, n)
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = gen(); } while (x >= limit);
        return x % n;
    }
};

PolyFp random_poly(Rng& rng, uint64_t p, int deg_below) {
    std::vector<uint64_t> c(deg_below);
    for (auto& x : c) x = rng.below(p);
    return PolyFp(p, std::move(c));
}

// Equal-degree factorization: f monic squarefree, all factors of degree d.
void equal_degree_split(const PolyFp& f, int d, Rng& rng, std::vector<PolyFp>& out) {
    if (f.deg() == d) { out.push_back(polyfp_make_monic(f)); return; }
    uint64_t p = f.p;
    while (true) {
        PolyFp a = random_poly(rng, p, f.deg());
        if (a.deg() < 1) continue;
        PolyFp g = polyfp_gcd(f, a);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(polyfp_divmod(f, g).first, d, rng, out);
            return;
        }
        PolyFp h;
        if (p == 2) {
            // trace map T(a) = a + a^2 + ... + a^(2^(d-1)) mod f
            h = PolyFp::zero(p);
            PolyFp t = polyfp_divmod(a, f).second;
            for (int i = 0; i < d; ++i) {
                h = polyfp_add(h, t);
                t = polyfp_divmod(polyfp_mul(t, t), f).second;
            }
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            h = polyfp_powmod(a, e, f);
            h = polyfp_sub(h, PolyFp::one(p));
        }
        g = polyfp_gcd(f, h);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(polyfp_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<PolyFp, uint32_t>> factor_poly_fp(const PolyFp& f, uint64_t seed) {
    if (f.deg() < 1) throw SemanticError("factoring a constant polynomial");
    uint64_t p = f.p;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

    std::vector<std::pair<PolyFp, uint32_t>> result;
    // work list of (monic poly, multiplicity weight)
    std::vector<std::pair<PolyFp, uint32_t>> stack{{polyfp_make_monic(f), 1}};
    while (!stack.empty()) {
        auto [g, weight] = stack.back();
        stack.pop_back();
        if (g.deg() < 1) continue;

        PolyFp gp = polyfp_derivative(g);
        if (gp.is_zero()) {
            // g = h(z^p): replace by h with weight multiplied by p.
            std::vector<uint64_t> hc(g.deg() / p + 1);
            for (size_t i = 0; i < hc.size(); ++i) hc[i] = g.coeff(i * p);
            stack.emplace_back(PolyFp(p, std::move(hc)), weight * static_cast<uint32_t>(p));
            continue;
        }
        PolyFp sq = polyfp_gcd(g, gp);
        if (sq.deg() > 0) {
            stack.emplace_back(sq, weight);
            stack.emplace_back(polyfp_divmod(g, sq).first, weight);
            continue;
        }

        // g is now monic squarefree: distinct-degree, then equal-degree.
        PolyFp rest = g;
        PolyFp x(p, {0, 1});
        PolyFp xq = polyfp_divmod(x, rest).second;
        for (int d = 1; rest.deg() >= 1 && d <= rest.deg(); ++d) {
            xq = polyfp_powmod(xq, mpz_class(static_cast<unsigned long>(p)), rest);
            PolyFp diff = polyfp_sub(xq, polyfp_divmod(x, rest).second);
            PolyFp gd = diff.is_zero() ? rest : polyfp_gcd(rest, diff);
            if (gd.deg() > 0) {
                std::vector<PolyFp> pieces;
                equal_degree_split(gd, d, rng, pieces);
                for (auto& piece : pieces) result.emplace_back(std::move(piece), weight);
                rest = polyfp_divmod(rest, gd).first;
                xq = polyfp_divmod(xq, rest).second;
            }
        }
        if (rest.deg() >= 1) result.emplace_back(rest, weight);
    }

    // Merge repeated factors and sort canonically.
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return std::lexicographical_compare(a.first.c.rbegin(), a.first.c.rend(),
                                            b.first.c.rbegin(), b.first.c.rend());
    });
    std::vector<std::pair<PolyFp, uint32_t>> merged;
    for (auto& item : result) {
        if (!merged.empty() && merged.back().first == item.first) merged.back().second += item.second;
        else merged.push_back(std::move(item));
    }
    return merged;
}

bool polyfp_irreducible(const PolyFp& f) {
    if (f.deg() < 1) return false;
    auto factors = factor_poly_fp(f, 0);
    return factors.size() == 1 && factors[0].second == 1;
}

} // namespace zpg
