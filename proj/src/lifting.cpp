#include "zpg/lifting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "zpg/chartab.hpp"
#include "zpg/linalg.hpp"
#include "zpg/numutil.hpp"
#include "zpg/polyfp.hpp"
#include "zpg/polyq.hpp"

namespace zpg {

namespace {

// a^k for k >= 1 by most-significant-bit square-and-multiply.
AlgFp algfp_pow(const AlgFp& a, const mpz_class& k) {
    size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    AlgFp r = a;
    for (size_t i = bits - 1; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * a;
    }
    return r;
}

// a^k for k >= 1 at a's own modulus, same ladder.
AlgMod algmod_pow(const AlgMod& a, const mpz_class& k) {
    size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    AlgMod r = a;
    for (size_t i = bits - 1; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * a;
    }
    return r;
}

// Exponent k such that a^k is idempotent for every a: p^s with p^s >= |G|
// annihilates the nilpotent part of a, and lcm(p^t - 1) over the irreducible
// factor degrees t of the characteristic polynomial reduces the unit part to
// its identity component.
mpz_class stable_power_exponent(const AlgFp& a) {
    const uint64_t p = a.dom().p;
    FpMat M = right_mult_matrix(a);
    PolyFp cp = fp_charpoly(M, p);
    auto factors = factor_poly_fp(cp, 0);

    mpz_class k(1);
    while (k < static_cast<unsigned long>(a.group().order()))
        k *= static_cast<unsigned long>(p);
    for (const auto& [f, mult] : factors) {
        (void)mult;
        if (f.deg() == 1 && f.coeff(0) == 0) continue;  // the factor z itself
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), p, static_cast<unsigned long>(f.deg()));
        q -= 1;
        if (q > 0) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), q.get_mpz_t());
    }
    return k;
}

// 3x^2 - 2x^3 at x's own modulus.
AlgMod polish(const AlgMod& x) {
    AlgMod x2 = x * x;
    AlgMod x3 = x2 * x;
    return x2.scaled(mpz_class(3)) - x3.scaled(mpz_class(2));
}

// Cheap rejection of spurious reconstructions: idempotency of the candidate
// modulo a fixed auxiliary prime.  Inconclusive (true) when a denominator is
// divisible by the auxiliary prime; the exact check still follows.
bool plausibly_idempotent(const AlgQ& e) {
    const uint64_t aux = (uint64_t(1) << 61) - 1;  // prime
    if (!is_p_integral(e, aux)) return true;
    AlgFp r = algq_mod_p(e, aux);
    return (r * r) == r;
}

}  // namespace

AlgFp idempotent_power(const AlgFp& a) {
    if (a.is_zero()) return a;
    AlgFp r = algfp_pow(a, stable_power_exponent(a));
    if (!((r * r) == r)) throw SemanticError("idempotent power verification failed");
    return r;
}

std::vector<AlgFp> fp_primitive_decomposition(const FiniteGroup& g, uint64_t p,
                                              uint64_t seed, const SplitOptions& opts) {
    if (!is_prime_u64(p)) throw SemanticError("modulus must be prime: " + std::to_string(p));
    if (g.order() > 2000)
        throw SemanticError("group order " + std::to_string(g.order()) +
                            " exceeds the dense decomposition bound 2000");
    FpDom dom{p};

    // Dimension multiset predicted by the modular data, when present.
    std::optional<std::multiset<size_t>> expected;
    if (opts.expected && opts.expected->cartan_columns) {
        const ModularData& m = *opts.expected;
        std::multiset<size_t> ms;
        for (size_t j = 0; j < m.rows.size(); ++j) {
            uint64_t copies = m.rows[j].dim / m.rows[j].s;
            auto pdim = static_cast<size_t>(m.projective_dim(j));
            for (uint64_t c = 0; c < copies; ++c) ms.insert(pdim);
        }
        expected = std::move(ms);
    }

    std::mt19937_64 rng(seed);
    auto random_elem = [&]() {
        AlgFp r(g, dom);
        for (uint32_t i = 0; i < g.order(); ++i) r.set_coeff(i, rng() % p);
        return r;
    };

    std::vector<AlgFp> work{AlgFp::one(g, dom)};
    std::vector<AlgFp> done;
    uint64_t trials = 0;
    uint32_t stall_limit = opts.stall_limit;

    auto dims_multiset = [&]() {
        std::multiset<size_t> ms;
        for (const AlgFp& f : done) ms.insert(left_ideal_dim(f));
        for (const AlgFp& f : work) ms.insert(left_ideal_dim(f));
        return ms;
    };

    while (true) {
        while (!work.empty()) {
            // Matching the predicted multiset certifies primitivity of every
            // current summand (a strict refinement would have more parts), so
            // the search may stop early.
            if (expected && dims_multiset() == *expected) {
                for (AlgFp& f : work) done.push_back(std::move(f));
                work.clear();
                break;
            }
            AlgFp f = std::move(work.back());
            work.pop_back();
            bool split = false;
            if (left_ideal_dim(f) > 1) {
                uint32_t stall = 0;
                while (stall < stall_limit) {
                    if (++trials > opts.trial_budget)
                        throw BudgetExhausted("decomposition search exceeded " +
                                              std::to_string(opts.trial_budget) + " trials");
                    AlgFp x = f * random_elem() * f;
                    AlgFp e = idempotent_power(x);
                    if (!e.is_zero() && !(e == f)) {
                        work.push_back(f - e);
                        work.push_back(std::move(e));
                        split = true;
                        break;
                    }
                    ++stall;
                }
            }
            if (!split) done.push_back(std::move(f));
        }
        if (!expected || dims_multiset() == *expected) break;
        // Dimensions disagree with the modular data: some accepted summand
        // must still split.  Re-examine everything with a doubled stall limit;
        // the global trial budget still bounds the total work.
        work.swap(done);
        stall_limit *= 2;
    }

    // Audit: orthogonal decomposition of 1 with dimensions summing to |G|.
    AlgFp sum = AlgFp::zero(g, dom);
    for (const AlgFp& f : done) sum = sum + f;
    if (!(sum == AlgFp::one(g, dom)))
        throw SemanticError("decomposition does not sum to the identity");
    size_t total = 0;
    for (const AlgFp& f : done) total += left_ideal_dim(f);
    if (total != g.order())
        throw SemanticError("decomposition dimensions do not sum to the group order");
    for (size_t i = 0; i < done.size(); ++i)
        for (size_t j = i + 1; j < done.size(); ++j)
            if (!(done[i] * done[j]).is_zero() || !(done[j] * done[i]).is_zero())
                throw SemanticError("decomposition is not orthogonal");

    // Canonical order: (ideal dimension, coefficient vector).
    std::vector<size_t> dims(done.size());
    for (size_t i = 0; i < done.size(); ++i) dims[i] = left_ideal_dim(done[i]);
    std::vector<size_t> order(done.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        if (dims[i] != dims[j]) return dims[i] < dims[j];
        return done[i].coeffs() < done[j].coeffs();
    });
    std::vector<AlgFp> out;
    out.reserve(done.size());
    for (size_t i : order) out.push_back(std::move(done[i]));
    return out;
}

AlgMod hensel_step(const AlgMod& e) {
    if (!((e * e) == e))
        throw NotApproxIdempotent("element is not idempotent at its own modulus");
    const mpz_class& q = e.dom().modulus;
    return polish(algmod_recast(e, q * q));
}

namespace {

// Isomorphism-type invariants of a projective left ideal: these three
// together identify the covered simple module uniquely.
struct TypeKey {
    size_t dim = 0;
    std::vector<PolyFp> print;
    std::vector<Cyclotomic> character;
    bool operator==(const TypeKey&) const = default;
};

TypeKey type_key_of(const AlgFp& e, const ModularData& m) {
    return TypeKey{left_ideal_dim(e), pim_fingerprint(e),
                   brauer_character_of_left_ideal(e, m.conductor, m.regular_classes)};
}

// Pairwise-orthogonal rational central idempotents summing to 1, each with
// p-integral coefficients, refining the group algebra as far as rational
// central cuts allow at p.  Rows of the ordinary table are grouped by the
// residues of their central characters |C| chi(c)/chi(1) modulo a fixed
// prime over p, the grouping is closed under the Galois action, and every
// part contributes the sum of the central idempotents of the rational
// components it contains.
std::vector<AlgQ> rational_central_cuts(const CharacterTable& t, uint64_t p) {
    const FiniteGroup& g = *t.group;
    const size_t k = t.rows.size();
    const auto n = static_cast<uint64_t>(t.conductor);
    const auto m = static_cast<uint32_t>(coprime_part(n, p));
    const uint64_t pa = n / m;

    // Inverse of the p-part of the conductor modulo its p'-part: the residue
    // of zeta_n^j is eta^(j * cinv) for eta the chosen residue of zeta_m.
    uint64_t cinv = 0;
    for (uint64_t x = 0; x < m; ++x)
        if ((pa % m) * x % m == 1 % m) {
            cinv = x;
            break;
        }

    PolyFp psi0 =
        factor_poly_fp(polyq_reduce_mod_p(cyclotomic_polynomial(m), p)).front().first;
    std::vector<PolyFp> zpow;
    {
        PolyFp z(p, {0, 1});
        PolyFp cur = PolyFp::one(p);
        for (uint32_t a = 0; a < m; ++a) {
            zpow.push_back(cur);
            cur = polyfp_divmod(polyfp_mul(cur, z), psi0).second;
        }
    }
    auto residue_of = [&](const Cyclotomic& v) {
        PolyFp r = PolyFp::zero(p);
        for (const auto& [e, coeff] : v.terms()) {
            if (coeff.get_den() != 1)
                throw SemanticError("central character value is not an algebraic integer");
            uint64_t cm = mpz_fdiv_ui(coeff.get_num().get_mpz_t(), p);
            if (cm == 0) continue;
            uint64_t je = (static_cast<uint64_t>(e) % m) * cinv % m;
            r = polyfp_add(r, polyfp_mul(zpow[je], PolyFp(p, {cm})));
        }
        return r;
    };

    // Signature of a row: the residue of its central character on each class.
    std::vector<std::string> sig(k);
    for (size_t i = 0; i < k; ++i) {
        Rational inv_deg(1, static_cast<unsigned long>(t.degree(i)));
        inv_deg.canonicalize();
        std::string s;
        for (size_t c = 0; c < g.classes().size(); ++c) {
            Rational scale = inv_deg * Rational(static_cast<unsigned long>(g.classes()[c].size));
            s += residue_of(t.rows[i][c].scaled_by(scale)).str() + "|";
        }
        sig[i] = std::move(s);
    }

    std::vector<size_t> parent(k);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](size_t a, size_t b) { parent[find(a)] = find(b); };
    std::map<std::string, size_t> first_with;
    for (size_t i = 0; i < k; ++i) {
        auto [it, fresh] = first_with.try_emplace(sig[i], i);
        if (!fresh) unite(i, it->second);
    }
    const auto orbits = galois_orbits(t);
    for (const auto& orbit : orbits)
        for (size_t j : orbit) unite(orbit.front(), j);

    std::map<size_t, std::vector<const std::vector<size_t>*>> parts;
    for (const auto& orbit : orbits) parts[find(orbit.front())].push_back(&orbit);

    std::vector<std::pair<size_t, AlgQ>> keyed;
    for (const auto& [root, members] : parts) {
        (void)root;
        size_t least = members.front()->front();
        AlgQ z = central_idempotent(t, *members.front());
        for (size_t i = 1; i < members.size(); ++i) {
            least = std::min(least, members[i]->front());
            z = z + central_idempotent(t, *members[i]);
        }
        if (!((z * z) == z)) throw SemanticError("central cut is not idempotent");
        if (!is_p_integral(z, p))
            throw SemanticError("central cut has a denominator divisible by p");
        keyed.emplace_back(least, std::move(z));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AlgQ> cuts;
    cuts.reserve(keyed.size());
    for (auto& [least, z] : keyed) {
        (void)least;
        cuts.push_back(std::move(z));
    }
    return cuts;
}

// Ladder over the canonical coefficient preimage of an idempotent reduction,
// with a rational reconstruction attempt at every rung; no height bound.
// Returns the certificate and the rung where it appeared.
std::optional<std::pair<AlgQ, uint64_t>> canonical_rational_lift(uint64_t p,
                                                                 const AlgFp& f,
                                                                 uint64_t rung_cap) {
    mpz_class p2 = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    AlgMod e = polish(algfp_lift(f, p2));
    uint64_t K = 2;
    while (true) {
        if (auto cand = algmod_reconstruct(e)) {
            if (is_p_integral(*cand, p) && plausibly_idempotent(*cand)) {
                try {
                    if (((*cand) * (*cand)) == *cand && algq_mod_p(*cand, p) == f &&
                        trace_dim(*cand) == static_cast<unsigned long>(left_ideal_dim(f)))
                        return std::make_pair(std::move(*cand), K);
                } catch (const Error&) {
                    // spurious reconstruction; keep climbing
                }
            }
        }
        if (K * 2 > rung_cap) return std::nullopt;
        e = hensel_step(e);
        K *= 2;
    }
}

// Element-index sets of small subgroups: the cyclic ones, plus closures of
// pairs of cyclic subgroups with the second member conjugated across the
// group.  Deterministic; closures past the size cap are discarded.
std::vector<std::vector<uint32_t>> small_subgroups(const FiniteGroup& g) {
    const size_t size_cap = std::min<size_t>(60, g.order() > 1 ? g.order() - 1 : 1);

    auto closure = [&](const std::vector<uint32_t>& gens)
        -> std::optional<std::vector<uint32_t>> {
        std::set<uint32_t> seen{0};
        std::vector<uint32_t> queue{0};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            for (uint32_t s : gens) {
                uint32_t z = g.mult(queue[qi], s);
                if (seen.insert(z).second) {
                    if (seen.size() > size_cap) return std::nullopt;
                    queue.push_back(z);
                }
            }
        }
        return std::vector<uint32_t>(seen.begin(), seen.end());
    };

    std::vector<std::vector<uint32_t>> cyc;
    for (const auto& H : g.cyclic_subgroup_reps())
        if (H.size() > 1) cyc.push_back(H);

    std::vector<uint32_t> conjugators;
    if (g.order() <= 120) {
        for (uint32_t c = 0; c < g.order(); ++c) conjugators.push_back(c);
    } else {
        for (const auto& cl : g.classes()) conjugators.push_back(cl.rep_index);
        for (uint32_t c = 0; c < 32 && c < g.order(); ++c) conjugators.push_back(c);
    }

    std::set<std::vector<uint32_t>> out(cyc.begin(), cyc.end());
    for (size_t i = 0; i < cyc.size() && out.size() < 96; ++i)
        for (size_t j = i; j < cyc.size() && out.size() < 96; ++j)
            for (uint32_t c : conjugators) {
                std::vector<uint32_t> gens = cyc[i];
                for (uint32_t x : cyc[j])
                    gens.push_back(g.mult(g.mult(c, x), g.inverse(c)));
                if (auto cl = closure(gens)) out.insert(std::move(*cl));
                if (out.size() >= 96) break;
            }

    std::vector<std::vector<uint32_t>> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (res.size() > 64) res.resize(64);
    return res;
}

// A rational p-integral idempotent together with the ladder rung that
// produced it.
struct PoolEntry {
    AlgQ e;
    uint64_t prec = 2;
};

// Rational p-integral idempotents harvested from small subgroups: each
// subgroup is rebuilt as a group in its own right, its unity is decomposed
// at p, and every summand whose canonical ladder reconstructs rationally is
// translated back into the ambient group.  The ideal such an entry generates
// in the ambient p-local order is the induced module of a subgroup
// projective, hence itself projective.
std::vector<PoolEntry> subgroup_idempotent_pool(const FiniteGroup& g, uint64_t p) {
    std::vector<PoolEntry> pool;
    QDom qd;
    for (const auto& H : small_subgroups(g)) {
        if (H.size() < 2 || H.size() > 24 || H.size() >= g.order()) continue;
        try {
            std::vector<Perm> gens;
            gens.reserve(H.size());
            for (uint32_t idx : H) gens.push_back(g.element(idx));
            FiniteGroup h = FiniteGroup::from_generators("sub", std::move(gens));
            std::vector<uint32_t> to_g(h.order());
            for (uint32_t i = 0; i < h.order(); ++i) to_g[i] = g.index_of(h.element(i));

            for (const AlgFp& f : fp_primitive_decomposition(h, p, 0)) {
                auto hit = canonical_rational_lift(p, f, 64);
                if (!hit) continue;
                AlgQ e = AlgQ::zero(g, qd);
                for (uint32_t i = 0; i < h.order(); ++i)
                    e.set_coeff(to_g[i], hit->first.coeff(i));
                pool.push_back(PoolEntry{std::move(e), hit->second});
            }
        } catch (const Error&) {
            // subgroup too unwieldy at p; skip it
        }
    }
    return pool;
}

}  // namespace

LiftOutcome lift_pim(const FiniteGroup& g, uint64_t p, const ModularData& m,
                     const std::string& label, uint64_t seed, uint64_t precision_max,
                     const mpz_class& height_bound, uint32_t retry_budget) {
    if (m.group != &g) throw DomainMismatch("modular data describes a different group");
    if (m.p != p) throw DomainMismatch("modular data is for a different prime");
    size_t row = m.rows.size();
    for (size_t j = 0; j < m.rows.size(); ++j)
        if (m.rows[j].label == label) row = j;
    if (row == m.rows.size()) throw UnknownLabel("no projective type labeled " + label);

    std::mt19937_64 rng(seed);
    uint64_t dec_seed = rng();
    SplitOptions opts;
    opts.expected = &m;
    std::vector<AlgFp> dec = fp_primitive_decomposition(g, p, dec_seed, opts);
    CartanResult cr = cartan_from_idempotents(dec, m);

    std::vector<size_t> candidates;
    for (size_t i = 0; i < dec.size(); ++i)
        if (cr.row_of_idempotent[i] == row) candidates.push_back(i);
    if (candidates.empty())
        throw SemanticError("decomposition has no summand of the requested type");
    const AlgFp& fbar = dec[candidates.front()];

    QDom qd;
    mpz_class p2 = mpz_class(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);

    uint64_t precision_reached = 0;
    uint32_t failures = 0;

    // Climb the doubling ladder from an idempotent approximation at modulus
    // p^2, attempting a rational reconstruction at every rung; returns the
    // first exact p-integral rational idempotent with the requested
    // reduction, together with the rung where it appeared.
    auto climb = [&](AlgMod e,
                     const AlgFp& ebar) -> std::optional<std::pair<AlgQ, uint64_t>> {
        uint64_t K = 2;
        while (true) {
            precision_reached = std::max(precision_reached, K);
            if (auto cand = algmod_reconstruct(e)) {
                bool within_height = true;
                if (height_bound > 0) {
                    for (uint32_t i = 0; i < g.order() && within_height; ++i) {
                        const Rational& c = cand->coeff(i);
                        if (abs(mpz_class(c.get_num())) > height_bound ||
                            mpz_class(c.get_den()) > height_bound)
                            within_height = false;
                    }
                }
                if (within_height && is_p_integral(*cand, p) && plausibly_idempotent(*cand)) {
                    try {
                        if (((*cand) * (*cand)) == *cand && algq_mod_p(*cand, p) == ebar &&
                            trace_dim(*cand) ==
                                static_cast<unsigned long>(left_ideal_dim(ebar)))
                            return std::make_pair(std::move(*cand), K);
                    } catch (const Error&) {
                        // spurious reconstruction; keep climbing
                    }
                }
            }
            if (K * 2 > precision_max) return std::nullopt;
            e = hensel_step(e);
            K *= 2;
        }
    };

    auto final_report = [&](AlgQ cert, const AlgFp& ebar, uint64_t prec) {
        LiftReport rep{g.name(),
                       p,
                       label,
                       std::move(cert),
                       prec,
                       true,
                       true,
                       true,
                       static_cast<uint64_t>(left_ideal_dim(ebar)),
                       seed};
        return LiftOutcome{std::move(rep), precision_reached, failures};
    };

    // First shot: the coefficient preimage of the decomposition
    // representative itself.
    {
        if (auto hit = climb(polish(algfp_lift(fbar, p2)), fbar))
            return final_report(std::move(hit->first), fbar, hit->second);
        ++failures;
    }

    // Descent through rational corners.  A dense preimage rarely has a
    // rational limit, so the retries instead shrink a rational p-integral
    // idempotent w whose reduction still covers the requested type: each
    // round picks a preimage supported inside the corner wAw, where minimal
    // polynomials stay small and limits are frequently rational, and every
    // successful corner lift splits w into two smaller rational idempotents.
    // The descent ends when the reduction of w is itself primitive of the
    // requested type, and w is then the certificate.
    TypeKey target = type_key_of(fbar, m);
    CharacterTable table = dixon_table(g, 0);
    std::vector<AlgQ> cuts = rational_central_cuts(table, p);

    std::optional<AlgQ> start;
    for (AlgQ& z : cuts) {
        if ((algq_mod_p(z, p) * fbar) == fbar) {
            start = std::move(z);
            break;
        }
    }
    if (!start) throw SemanticError("no central cut covers the requested type");

    std::vector<PoolEntry> pool = subgroup_idempotent_pool(g, p);

    // Structure elements reused by the corner preimages: sums over the
    // nontrivial cyclic subgroups of order coprime to p (one per conjugacy
    // class of subgroups), and an integer lift of the target representative.
    std::vector<AlgQ> cyclic_sums;
    for (const auto& H : g.cyclic_subgroup_reps()) {
        if (H.size() <= 1 || H.size() % p == 0) continue;
        AlgQ s = AlgQ::zero(g, qd);
        for (uint32_t idx : H) s = s + AlgQ::basis(g, qd, idx);
        cyclic_sums.push_back(std::move(s));
    }
    auto integer_lift = [&](const AlgFp& x) {
        AlgQ r = AlgQ::zero(g, qd);
        for (uint32_t i = 0; i < g.order(); ++i)
            r.set_coeff(i, Rational(static_cast<unsigned long>(x.coeff(i))));
        return r;
    };
    auto random_int_elem = [&]() {
        AlgQ r = AlgQ::zero(g, qd);
        for (uint32_t i = 0; i < g.order(); ++i)
            r.set_coeff(i, Rational(static_cast<unsigned long>(rng() % p)));
        return r;
    };
    const AlgQ target_lift = integer_lift(fbar);

    // Number of projective summands of each type inside the ideal generated
    // by an idempotent reduction: its lifted character written in the Brauer
    // basis, resolved against the Cartan columns computed from the
    // decomposition.
    auto type_multiplicities = [&](const AlgFp& e) {
        auto beta = brauer_character_of_left_ideal(e, m.conductor, m.regular_classes);
        auto coords = brauer_coordinates(m, beta, m.conductor);
        if (!coords)
            throw SemanticError("projective character outside the Brauer span");
        const size_t R = m.rows.size();
        QMat a(R, std::vector<Rational>(R));
        for (size_t i = 0; i < R; ++i)
            for (size_t j = 0; j < R; ++j)
                a[i][j] = Rational(static_cast<unsigned long>(cr.columns[j][i]));
        QMat rhs(1);
        rhs[0] = *coords;
        QMat sol = q_solve(a, rhs);
        std::vector<uint64_t> mult;
        for (const Rational& v : sol[0]) {
            if (v.get_den() != 1 || v < 0)
                throw SemanticError("projective multiplicity is not a nonnegative integer");
            mult.push_back(v.get_num().get_ui());
        }
        return mult;
    };

    // Starting idempotents, smallest trace first: the covering central cut
    // and its products with the pooled subgroup idempotents (the cut is
    // central, so every product is again a rational p-integral idempotent,
    // and its ideal is a direct summand of an induced projective).  A start
    // qualifies when the module its reduction generates contains the
    // requested type.
    struct StartCand {
        AlgQ w;
        uint64_t prec;
        uint64_t trace;
    };
    std::vector<StartCand> starts;
    auto consider_start = [&](AlgQ cand, uint64_t prec) {
        if (algq_mod_p(cand, p).is_zero()) return;
        for (const StartCand& s : starts)
            if (s.w == cand) return;
        uint64_t tr = trace_dim(cand).get_ui();
        starts.push_back(StartCand{std::move(cand), prec, tr});
    };
    for (const PoolEntry& pe : pool)
        consider_start((*start) * pe.e, std::max<uint64_t>(2, pe.prec));
    consider_start(std::move(*start), 2);
    std::stable_sort(starts.begin(), starts.end(),
                     [](const StartCand& a, const StartCand& b) { return a.trace < b.trace; });

    // Corner descent from one starting idempotent w: each accepted corner
    // lift splits w, the side containing the requested type is kept, and the
    // descent certifies as soon as the reduction of w is primitive of that
    // type.  Returns the report, or nothing when a round exhausts its
    // attempts without an accepted split.
    auto descend = [&](AlgQ w, uint64_t prec0) -> std::optional<LiftOutcome> {
        uint64_t cert_precision = std::max<uint64_t>(2, prec0);
        const uint32_t attempt_budget = 2 * (retry_budget + 1);
        for (size_t step = 0; step <= g.order(); ++step) {
            AlgFp wbar = algq_mod_p(w, p);
            if (type_key_of(wbar, m) == target) {
                if (!((w * w) == w) || !is_p_integral(w, p) ||
                    trace_dim(w) != static_cast<unsigned long>(left_ideal_dim(wbar)))
                    throw SemanticError("descent certificate failed verification");
                return final_report(std::move(w), wbar, cert_precision);
            }

            bool accepted = false;
            // Only attempts that reach the reconstruction ladder consume the
            // budget; preimages whose reduction collapses to 0 or to the
            // whole corner are rejected for free (the draw cap keeps this
            // finite).
            uint32_t laddered = 0;
            for (uint32_t a = 0;
                 laddered < attempt_budget && a < 16 * attempt_budget + 16 && !accepted; ++a) {
                AlgQ x0 = AlgQ::zero(g, qd);
                uint32_t kind = a % 4;
                if (kind == 0 && !cyclic_sums.empty()) {
                    x0 = w * cyclic_sums[(a / 4) % cyclic_sums.size()] * w;
                } else if (kind == 2) {
                    // conjugated rank-capped preimage: the reduction has
                    // ideal dimension at most that of the target
                    // representative
                    AlgQ r1 = random_int_elem();
                    AlgQ r2 = random_int_elem();
                    try {
                        AlgFp r1bar = algq_mod_p(r1, p);
                        FpMat M = right_mult_matrix(r1bar);
                        std::vector<uint64_t> one_col(g.order(), 0);
                        one_col[0] = 1 % p;
                        auto sols = fp_solve(M, {one_col}, p);
                        AlgFp inv(g, FpDom{p});
                        for (uint32_t i = 0; i < g.order(); ++i) inv.set_coeff(i, sols[0][i]);
                        r2 = integer_lift(inv);
                    } catch (const SemanticError&) {
                        // singular reduction: keep the independent random factor
                    }
                    x0 = w * r1 * target_lift * r2 * w;
                } else if (kind == 3 && !pool.empty()) {
                    x0 = w * pool[(a / 4) % pool.size()].e * w;
                } else {
                    x0 = w * random_int_elem() * w;
                }

                AlgFp xbar = algq_mod_p(x0, p);
                if (xbar.is_zero()) continue;
                AlgFp ec = idempotent_power(xbar);
                if (ec.is_zero() || ec == wbar) continue;
                ++laddered;

                AlgMod e1 = polish(algmod_pow(algq_mod(x0, p2), stable_power_exponent(xbar)));
                auto hit = climb(std::move(e1), ec);
                if (!hit) {
                    ++failures;
                    continue;
                }
                AlgQ u = std::move(hit->first);
                if (!((u * w) == u) || !((w * u) == u)) {
                    ++failures;
                    continue;
                }
                cert_precision = std::max(cert_precision, hit->second);
                std::vector<uint64_t> mult = type_multiplicities(ec);
                w = (mult[row] >= 1) ? std::move(u) : (w - u);
                accepted = true;
            }
            if (!accepted) return std::nullopt;
        }
        return std::nullopt;
    };

    size_t tried = 0;
    for (size_t si = 0; si < starts.size() && tried < 6; ++si) {
        bool viable = false;
        try {
            viable = type_multiplicities(algq_mod_p(starts[si].w, p))[row] >= 1;
        } catch (const Error&) {
            // character outside the projective span; not a usable start
        }
        if (!viable) continue;
        ++tried;
        if (auto out = descend(std::move(starts[si].w), starts[si].prec))
            return std::move(*out);
    }
    return LiftOutcome{std::nullopt, precision_reached, failures};
}

namespace {

int perm_sign(const Perm& s) {
    uint32_t d = s.degree();
    std::vector<bool> vis(d, false);
    uint32_t cycles = 0;
    for (uint32_t i = 0; i < d; ++i) {
        if (vis[i]) continue;
        ++cycles;
        for (uint32_t j = i; !vis[j]; j = s.apply(j)) vis[j] = true;
    }
    return ((d - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace

AlgQ young_idempotent(const FiniteGroup& sn, const std::vector<uint32_t>& partition,
                      const std::vector<std::vector<uint32_t>>& tableau) {
    if (partition.empty()) throw NotAPartition("empty partition");
    uint64_t n = 0;
    for (size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] == 0) throw NotAPartition("partition parts must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw NotAPartition("partition parts must be nonincreasing");
        n += partition[i];
    }

    mpz_class fact(1);
    for (uint64_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
    if (sn.degree() != n || mpz_class(static_cast<unsigned long>(sn.order())) != fact)
        throw DomainMismatch("group is not the symmetric group on " + std::to_string(n) +
                             " points");

    if (tableau.size() != partition.size())
        throw NotStandardTableau("tableau has the wrong number of rows");
    std::vector<uint32_t> row_of(n, 0), col_of(n, 0);
    std::vector<bool> seen(n, false);
    for (size_t i = 0; i < tableau.size(); ++i) {
        if (tableau[i].size() != partition[i])
            throw NotStandardTableau("tableau row length differs from the partition");
        for (size_t j = 0; j < tableau[i].size(); ++j) {
            uint32_t v = tableau[i][j];
            if (v < 1 || v > n) throw NotStandardTableau("tableau entries must lie in 1..n");
            if (seen[v - 1]) throw NotStandardTableau("duplicate tableau entry");
            seen[v - 1] = true;
            if (j > 0 && tableau[i][j - 1] >= v)
                throw NotStandardTableau("tableau rows must increase left to right");
            if (i > 0 && tableau[i - 1][j] >= v)
                throw NotStandardTableau("tableau columns must increase top to bottom");
            row_of[v - 1] = static_cast<uint32_t>(i);
            col_of[v - 1] = static_cast<uint32_t>(j);
        }
    }

    // Hook-length count f = n! / prod(hooks).
    std::vector<uint32_t> conj(partition.front(), 0);
    for (uint32_t part : partition)
        for (uint32_t j = 0; j < part; ++j) ++conj[j];
    mpz_class hooks(1);
    for (size_t i = 0; i < partition.size(); ++i)
        for (uint32_t j = 0; j < partition[i]; ++j)
            hooks *= static_cast<unsigned long>(partition[i] - j + conj[j] - i - 1);
    mpz_class fdim = fact / hooks;

    QDom qd;
    AlgQ a = AlgQ::zero(sn, qd);
    AlgQ b = AlgQ::zero(sn, qd);
    for (uint32_t idx = 0; idx < sn.order(); ++idx) {
        const Perm& s = sn.element(idx);
        bool row_pres = true, col_pres = true;
        for (uint32_t x = 0; x < n && (row_pres || col_pres); ++x) {
            uint32_t y = s.apply(x);
            if (row_of[y] != row_of[x]) row_pres = false;
            if (col_of[y] != col_of[x]) col_pres = false;
        }
        if (row_pres) a.set_coeff(idx, Rational(1));
        if (col_pres) b.set_coeff(idx, Rational(perm_sign(s)));
    }

    Rational scale(fdim, fact);
    scale.canonicalize();
    return (a * b).scaled(scale);
}

IdemTableReport verify_idemtable(const FiniteGroup& g, uint64_t p,
                                 const std::vector<std::pair<std::string, AlgQ>>& columns,
                                 const ModularData& m, uint64_t seed) {
    if (m.group != &g) throw DomainMismatch("modular data describes a different group");
    if (m.p != p) throw DomainMismatch("modular data is for a different prime");

    SplitOptions opts;
    opts.expected = &m;
    std::vector<AlgFp> ref = fp_primitive_decomposition(g, p, seed, opts);
    CartanResult cr = cartan_from_idempotents(ref, m);

    // One invariant triple per projective type: (ideal dimension, fingerprint,
    // lifted character).  All three are isomorphism invariants and together
    // they separate every pair of types (distinct types have distinct
    // characters).
    struct RowKey {
        size_t dim;
        std::vector<PolyFp> print;
        std::vector<Cyclotomic> character;
    };
    std::vector<std::optional<RowKey>> keys(m.rows.size());
    for (size_t i = 0; i < ref.size(); ++i) {
        size_t r = cr.row_of_idempotent[i];
        if (keys[r]) continue;
        keys[r] = RowKey{left_ideal_dim(ref[i]), pim_fingerprint(ref[i]),
                         brauer_character_of_left_ideal(ref[i], m.conductor,
                                                        m.regular_classes)};
    }

    IdemTableReport rep;
    rep.group_name = g.name();
    rep.p = p;
    bool all = true;
    for (const auto& [label, e] : columns) {
        IdemColumnCheck c;
        c.declared_label = label;
        c.p_integral = is_p_integral(e, p);
        c.idempotent = ((e * e) == e);
        if (c.idempotent && c.p_integral) {
            try {
                c.dim = trace_dim(e).get_ui();
                AlgFp ebar = algq_mod_p(e, p);
                if (!ebar.is_zero()) {
                    size_t d = left_ideal_dim(ebar);
                    auto print = pim_fingerprint(ebar);
                    auto character =
                        brauer_character_of_left_ideal(ebar, m.conductor, m.regular_classes);
                    for (size_t rj = 0; rj < m.rows.size(); ++rj) {
                        if (keys[rj] && keys[rj]->dim == d && keys[rj]->print == print &&
                            keys[rj]->character == character) {
                            c.identified_label = m.rows[rj].label;
                            c.dim_matches = (c.dim == d);
                            break;
                        }
                    }
                }
            } catch (const Error&) {
                // reduction failed to identify; flags stay false
            }
        }
        c.label_matches =
            !c.identified_label.empty() && c.identified_label == c.declared_label;
        all = all && c.idempotent && c.p_integral && c.label_matches && c.dim_matches;
        rep.columns.push_back(std::move(c));
    }
    rep.all_ok = all;
    return rep;
}

} // namespace zpg
