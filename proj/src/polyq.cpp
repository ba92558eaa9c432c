#include "zpg/polyq.hpp"

#include <map>
#include <mutex>

#include "zpg/error.hpp"

namespace zpg {

PolyQ polyq_trim(PolyQ f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int polyq_deg(const PolyQ& f) { return static_cast<int>(f.size()) - 1; }

PolyQ polyq_add(const PolyQ& a, const PolyQ& b) {
    PolyQ out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return polyq_trim(std::move(out));
}

PolyQ polyq_sub(const PolyQ& a, const PolyQ& b) {
    PolyQ out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return polyq_trim(std::move(out));
}

PolyQ polyq_mul(const PolyQ& a, const PolyQ& b) {
    if (a.empty() || b.empty()) return {};
    PolyQ out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return polyq_trim(std::move(out));
}

PolyQ polyq_scale(const PolyQ& a, const Rational& c) {
    if (c == 0) return {};
    PolyQ out = a;
    for (auto& x : out) x *= c;
    return out;
}

std::pair<PolyQ, PolyQ> polyq_divmod(const PolyQ& a, const PolyQ& b) {
    if (b.empty()) throw SemanticError("polynomial division by zero");
    PolyQ rem = a, quot;
    int db = polyq_deg(b);
    if (polyq_deg(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (polyq_deg(rem) >= db) {
        int dr = polyq_deg(rem);
        Rational c = rem.back() / lead;
        quot[dr - db] = c;
        for (int i = 0; i <= db; ++i) rem[dr - db + i] -= c * b[i];
        rem = polyq_trim(std::move(rem));
    }
    return {polyq_trim(std::move(quot)), rem};
}

bool polyq_divides(const PolyQ& b, const PolyQ& a) {
    if (b.empty()) return a.empty();
    return polyq_divmod(a, b).second.empty();
}

PolyQ polyq_gcd(PolyQ a, PolyQ b) {
    a = polyq_trim(std::move(a));
    b = polyq_trim(std::move(b));
    while (!b.empty()) {
        PolyQ r = polyq_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

std::optional<PolyQ> polyq_invmod(const PolyQ& a, const PolyQ& m) {
    // extended Euclid: r = s*a + t*m, tracking s only
    PolyQ r0 = m, r1 = polyq_divmod(a, m).second;
    PolyQ s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = polyq_divmod(r0, r1);
        PolyQ s2 = polyq_sub(s0, polyq_mul(q, s1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (polyq_deg(r0) != 0) return std::nullopt;  // gcd not a unit
    return polyq_scale(s0, 1 / r0[0]);
}

PolyQ polyq_xn_minus_1(uint32_t n) {
    PolyQ f(n + 1, Rational(0));
    f[0] = -1;
    f[n] = 1;
    return f;
}

const PolyQ& cyclotomic_polynomial(uint32_t n) {
    static std::map<uint32_t, PolyQ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively by
    // exact division.
    PolyQ f = polyq_xn_minus_1(n);
    for (uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        PolyQ phi_d;
        {
            auto jt = cache.find(d);
            if (jt != cache.end()) {
                phi_d = jt->second;
            } else {
                phi_d = polyq_xn_minus_1(d);
                for (uint32_t e = 1; e < d; ++e)
                    if (d % e == 0) phi_d = polyq_divmod(phi_d, cache.at(e)).first;
                cache.emplace(d, phi_d);
            }
        }
        f = polyq_divmod(f, phi_d).first;
    }
    return cache.emplace(n, std::move(f)).first->second;
}

} // namespace zpg
