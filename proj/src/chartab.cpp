#include "zpg/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zpg/error.hpp"

namespace zpg {

size_t CharacterTable::degree(size_t row) const {
    const Rational d = rows.at(row).at(0).rational_part();
    if (d.get_den() != 1 || d <= 0)
        throw SemanticError("character degree is not a positive integer: " + rational_str(d));
    return static_cast<size_t>(d.get_num().get_ui());
}

void verify_table(const CharacterTable& t) {
    if (!t.group) throw SemanticError("character table has no group");
    const FiniteGroup& g = *t.group;
    const size_t k = g.classes().size();
    if (t.rows.size() != k)
        throw SemanticError("table must be square: " + std::to_string(t.rows.size()) +
                            " rows for " + std::to_string(k) + " classes");
    if (t.labels.size() != t.rows.size()) throw SemanticError("label/row count mismatch");
    std::set<std::string> lbl(t.labels.begin(), t.labels.end());
    if (lbl.size() != t.labels.size() || lbl.count(""))
        throw SemanticError("row labels must be distinct and nonempty");
    for (const auto& row : t.rows) {
        if (row.size() != k) throw SemanticError("row length does not match class count");
        for (const Cyclotomic& v : row)
            if (v.conductor() != t.conductor)
                throw SemanticError("value conductor differs from table conductor");
    }

    const Cyclotomic one(t.conductor, Rational(1));
    for (const Cyclotomic& v : t.rows[0])
        if (!(v == one)) throw SemanticError("first row is not the trivial character");

    // degree audit
    mpz_class degsum = 0;
    for (size_t i = 0; i < k; ++i) {
        size_t d = t.degree(i);
        degsum += mpz_class(static_cast<unsigned long>(d)) * static_cast<unsigned long>(d);
    }
    if (degsum != static_cast<unsigned long>(g.order()))
        throw DegreeSumFailure("sum of squared degrees is " + degsum.get_str() +
                               ", expected " + std::to_string(g.order()));

    const std::vector<uint32_t> inv = g.class_power_map(-1);
    const Rational order(static_cast<unsigned long>(g.order()));

    // row orthogonality: sum_c |c| chi(c) chi'(c^-1) = delta |G|
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i; j < k; ++j) {
            Cyclotomic s(t.conductor);
            for (size_t c = 0; c < k; ++c) {
                Cyclotomic term = t.rows[i][c] * t.rows[j][inv[c]];
                s = s + term.scaled_by(Rational(g.classes()[c].size));
            }
            Rational want = (i == j) ? order : Rational(0);
            if (!(s == Cyclotomic(t.conductor, want)))
                throw OrthogonalityFailure("row orthogonality fails for rows " +
                                           t.labels[i] + ", " + t.labels[j]);
        }
    }

    // column orthogonality: sum_chi chi(c) chi(c'^-1) = delta |G|/|c|
    for (size_t c = 0; c < k; ++c) {
        for (size_t c2 = c; c2 < k; ++c2) {
            Cyclotomic s(t.conductor);
            for (size_t i = 0; i < k; ++i) s = s + t.rows[i][c] * t.rows[i][inv[c2]];
            Rational want = (c == c2)
                ? order / Rational(g.classes()[c].size)
                : Rational(0);
            if (!(s == Cyclotomic(t.conductor, want)))
                throw OrthogonalityFailure("column orthogonality fails for classes " +
                                           std::to_string(c) + ", " + std::to_string(c2));
        }
    }
}

std::vector<size_t> canonical_row_order(const CharacterTable& t) {
    const size_t k = t.rows.size();
    const Cyclotomic one(t.conductor, Rational(1));
    auto is_trivial = [&](size_t i) {
        for (const Cyclotomic& v : t.rows[i])
            if (!(v == one)) return false;
        return true;
    };
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        bool ta = is_trivial(a), tb = is_trivial(b);
        if (ta != tb) return ta;
        size_t da = t.degree(a), db = t.degree(b);
        if (da != db) return da < db;
        for (size_t c = 0; c < t.rows[a].size(); ++c) {
            if (t.rows[a][c] == t.rows[b][c]) continue;
            return Cyclotomic::lex_less(t.rows[a][c], t.rows[b][c]);
        }
        return false;
    });
    return idx;
}

bool same_characters(const CharacterTable& a, const CharacterTable& b) {
    if (a.group != b.group)
        throw DomainMismatch("character tables live on different group objects");
    if (a.conductor != b.conductor || a.rows.size() != b.rows.size()) return false;
    std::vector<size_t> oa = canonical_row_order(a), ob = canonical_row_order(b);
    for (size_t i = 0; i < oa.size(); ++i)
        if (!(a.rows[oa[i]] == b.rows[ob[i]])) return false;
    return true;
}

size_t galois_twist_row(const CharacterTable& t, size_t row, int64_t k) {
    std::vector<Cyclotomic> twisted;
    twisted.reserve(t.rows[row].size());
    for (const Cyclotomic& v : t.rows[row]) twisted.push_back(v.sigma(k));
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i] == twisted) return i;
    throw SemanticError("table is not closed under the Galois action (row " +
                        t.labels.at(row) + ", k = " + std::to_string(k) + ")");
}

std::vector<std::vector<size_t>> galois_orbits(const CharacterTable& t) {
    const size_t k = t.rows.size();
    std::vector<bool> seen(k, false);
    std::vector<std::vector<size_t>> orbits;
    for (size_t i = 0; i < k; ++i) {
        if (seen[i]) continue;
        std::set<size_t> orbit{i};
        for (uint32_t u = 1; u < std::max<uint32_t>(t.conductor, 2); ++u) {
            if (std::gcd(u, t.conductor) != 1) continue;
            orbit.insert(galois_twist_row(t, i, u));
        }
        for (size_t m : orbit) seen[m] = true;
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

bool p_inert_for_row(const CharacterTable& t, size_t row, uint64_t p) {
    if (t.group->order() % p == 0)
        throw PrimeDividesOrder("inertness is only decided for p coprime to |G|");
    std::vector<std::vector<size_t>> orbits = galois_orbits(t);
    const std::vector<size_t>* full = nullptr;
    for (const auto& o : orbits)
        if (std::find(o.begin(), o.end(), row) != o.end()) full = &o;

    std::set<size_t> porbit;
    size_t cur = row;
    do {
        porbit.insert(cur);
        cur = galois_twist_row(t, cur, static_cast<int64_t>(p % std::max<uint32_t>(t.conductor, 1)));
    } while (!porbit.count(cur));
    return porbit.size() == full->size();
}

int fs_indicator(const CharacterTable& t, size_t row) {
    const FiniteGroup& g = *t.group;
    const std::vector<uint32_t> pm2 = g.class_power_map(2);
    Cyclotomic s(t.conductor);
    for (size_t c = 0; c < g.classes().size(); ++c)
        s = s + t.rows[row][pm2[c]].scaled_by(Rational(g.classes()[c].size));
    if (!s.is_rational())
        throw IndicatorNotIntegral("indicator sum is irrational for row " + t.labels.at(row));
    Rational v = s.rational_part() / Rational(static_cast<unsigned long>(g.order()));
    if (v.get_den() != 1 || v < -1 || v > 1)
        throw IndicatorNotIntegral("indicator is " + rational_str(v) + " for row " + t.labels.at(row));
    return static_cast<int>(v.get_num().get_si());
}

namespace {

// <Ind_H^G 1, chi> = (1/|H|) sum_{h in H} chi(h) for a subgroup given by
// element indices; a nonnegative integer for any character chi.
mpz_class perm_multiplicity_subgroup(const CharacterTable& t, size_t row,
                                     const std::vector<uint32_t>& subgroup) {
    const FiniteGroup& g = *t.group;
    Cyclotomic s(t.conductor);
    for (uint32_t h : subgroup) s = s + t.rows[row][g.class_of(h)];
    if (!s.is_rational())
        throw SemanticError("permutation-character multiplicity is irrational");
    Rational m = s.rational_part() / Rational(static_cast<unsigned long>(subgroup.size()));
    if (m.get_den() != 1 || m < 0)
        throw SemanticError("permutation-character multiplicity is not a nonnegative integer: " +
                            rational_str(m));
    return m.get_num();
}

// Multiplicity of chi in the permutation character of the natural action on
// points: (1/|G|) sum_c |c| fix(c) chi(c^-1).
mpz_class perm_multiplicity_points(const CharacterTable& t, size_t row) {
    const FiniteGroup& g = *t.group;
    const std::vector<uint32_t> inv = g.class_power_map(-1);
    Cyclotomic s(t.conductor);
    for (size_t c = 0; c < g.classes().size(); ++c) {
        const Perm& rep = g.element(g.classes()[c].rep_index);
        uint64_t fix = 0;
        for (uint32_t pt = 0; pt < rep.degree(); ++pt)
            if (rep.apply(pt) == pt) ++fix;
        s = s + t.rows[row][inv[c]].scaled_by(Rational(g.classes()[c].size * fix));
    }
    if (!s.is_rational())
        throw SemanticError("point-action multiplicity is irrational");
    Rational m = s.rational_part() / Rational(static_cast<unsigned long>(g.order()));
    if (m.get_den() != 1 || m < 0)
        throw SemanticError("point-action multiplicity is not a nonnegative integer: " +
                            rational_str(m));
    return m.get_num();
}

} // namespace

SchurProbe schur_probe(const CharacterTable& t, size_t row) {
    SchurProbe probe;
    probe.indicator = fs_indicator(t, row);

    if (t.degree(row) == 1) {
        probe.verdict = SchurVerdict::One;
        probe.witness = "linear character";
        return probe;
    }
    if (probe.indicator == -1) {
        probe.verdict = SchurVerdict::AtLeastTwo;
        probe.witness = "Frobenius-Schur indicator -1";
        return probe;
    }

    // the Schur index divides the multiplicity of chi in any rational
    // character; probe permutation characters of cyclic subgroups and of the
    // natural point action
    mpz_class g = 0;
    std::string first_unit;
    for (const auto& sub : t.group->cyclic_subgroup_reps()) {
        mpz_class m = perm_multiplicity_subgroup(t, row, sub);
        if (m == 0) continue;
        if (m == 1 && first_unit.empty())
            first_unit = "coset action of a cyclic subgroup of order " + std::to_string(sub.size());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
    mpz_class mp = perm_multiplicity_points(t, row);
    if (mp != 0) {
        if (mp == 1 && first_unit.empty()) first_unit = "natural permutation character";
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mp.get_mpz_t());
    }

    if (!first_unit.empty()) {
        probe.verdict = SchurVerdict::One;
        probe.witness = first_unit + " contains the character with multiplicity 1";
    } else if (g == 1) {
        probe.verdict = SchurVerdict::One;
        probe.witness = "multiplicities in probed rational characters have gcd 1";
    } else {
        probe.verdict = SchurVerdict::Unknown;
        probe.witness = "probed multiplicities have gcd " + g.get_str();
    }
    return probe;
}

AlgQ central_idempotent(const CharacterTable& t, const std::vector<size_t>& orbit) {
    if (orbit.empty()) throw NotAFullOrbit("empty orbit");
    std::vector<size_t> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    bool found = false;
    for (const auto& o : galois_orbits(t))
        if (o == sorted) found = true;
    if (!found) throw NotAFullOrbit("index set is not a full Galois orbit");

    const FiniteGroup& g = *t.group;
    const size_t d = t.degree(sorted[0]);
    std::vector<Rational> classval(g.classes().size());
    for (size_t c = 0; c < g.classes().size(); ++c) {
        Cyclotomic s(t.conductor);
        for (size_t i : sorted) s = s + t.rows[i][c];
        classval[c] = s.rational_part();   // orbit sums are rational
    }
    Rational scale(static_cast<unsigned long>(d), static_cast<unsigned long>(g.order()));
    scale.canonicalize();
    AlgQ e(g, QDom{});
    for (uint32_t x = 0; x < g.order(); ++x)
        e.set_coeff(x, scale * classval[g.class_of(g.inverse(x))]);
    return e;
}

} // namespace zpg
