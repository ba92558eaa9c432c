#include "zpg/ordcrit.hpp"

#include <string>

#include "zpg/error.hpp"
#include "zpg/numutil.hpp"

namespace zpg {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Semiperfect: return "semiperfect";
        case Verdict::NotSemiperfect: return "not_semiperfect";
        default: return "unknown";
    }
}

CriterionReport criterion_from_table(const CharacterTable& t, uint64_t p) {
    if (!is_prime_u64(p)) throw SemanticError("p must be prime");
    if (t.group->order() % p == 0)
        throw PrimeDividesOrder("criterion requires p coprime to the group order");

    CriterionReport rep;
    rep.group_name = t.group->name();
    rep.p = p;

    bool all_good = true;
    bool any_bad = false;
    for (const auto& orbit : galois_orbits(t)) {
        OrbitRecord rec;
        for (size_t row : orbit) rec.labels.push_back(t.labels[row]);
        rec.field_degree = orbit.size();
        rec.inert = p_inert_for_row(t, orbit.front(), p);
        rec.schur = schur_probe(t, orbit.front());
        if (!rec.inert || rec.schur.verdict == SchurVerdict::AtLeastTwo) any_bad = true;
        if (!rec.inert || rec.schur.verdict != SchurVerdict::One) all_good = false;
        rep.orbits.push_back(std::move(rec));
    }
    rep.verdict = all_good  ? Verdict::Semiperfect
                  : any_bad ? Verdict::NotSemiperfect
                            : Verdict::Unknown;
    return rep;
}

CriterionReport semiperfect_ordinary(const FiniteGroup& g, uint64_t p, uint64_t seed) {
    return criterion_from_table(dixon_table(g, seed), p);
}

CyclicReport cyclic_criterion(uint64_t n, uint64_t p) {
    if (n == 0) throw SemanticError("cyclic group order must be positive");
    if (!is_prime_u64(p)) throw SemanticError("p must be prime");
    if (n % p == 0) throw PrimeDividesOrder("cyclic criterion requires p coprime to n");

    CyclicReport rep;
    rep.n = n;
    rep.p = p;
    bool ok = true;
    for (uint64_t d : divisors_of(n)) {
        uint64_t phi = euler_phi(d);
        uint64_t ord = multiplicative_order(p, d);
        rep.divisors.push_back({d, ord, phi});
        if (ord != phi) ok = false;
    }
    rep.verdict = ok ? Verdict::Semiperfect : Verdict::NotSemiperfect;
    return rep;
}

std::optional<CriterionReport> reduce_by_normal_sylow(const FiniteGroup& g, uint64_t p,
                                                      uint64_t seed) {
    if (!is_prime_u64(p)) throw SemanticError("p must be prime");
    auto quotient = g.normal_sylow_quotient(p);
    if (!quotient) return std::nullopt;
    CriterionReport rep = semiperfect_ordinary(*quotient, p, seed);
    rep.reduction_trail.push_back(g.name() + " -> " + quotient->name());
    return rep;
}

} // namespace zpg
