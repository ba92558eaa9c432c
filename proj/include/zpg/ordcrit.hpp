#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpg/chartab.hpp"
#include "zpg/group.hpp"

namespace zpg {

enum class Verdict { Semiperfect, NotSemiperfect, Unknown };

std::string verdict_str(Verdict v);

// One Galois orbit of irreducible characters and the two local obstructions
// attached to it: whether p stays inert in the value field, and what the
// Schur-index probe certified.
struct OrbitRecord {
    std::vector<std::string> labels;
    size_t field_degree = 1;     // [Q(chi) : Q] = orbit size
    bool inert = false;
    SchurProbe schur;
};

struct CriterionReport {
    std::string group_name;
    uint64_t p = 0;
    std::vector<OrbitRecord> orbits;
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> reduction_trail;   // nonempty when a quotient was used
};

// Decide semiperfectness of the p-local group algebra when p does not divide
// |G|: Semiperfect iff every orbit is inert with Schur verdict One;
// NotSemiperfect as soon as some orbit is split or has verdict AtLeastTwo;
// Unknown otherwise.  Throws PrimeDividesOrder when p | |G|.
CriterionReport criterion_from_table(const CharacterTable& t, uint64_t p);

// Same, computing the character table internally.
CriterionReport semiperfect_ordinary(const FiniteGroup& g, uint64_t p, uint64_t seed = 0);

// Fast path for cyclic groups: Z_(p)C_n is semiperfect iff p generates the
// units modulo every divisor of n, i.e. ord_d(p) = phi(d) for all d | n.
struct CyclicReport {
    uint64_t n = 0, p = 0;
    struct DivisorRecord {
        uint64_t d, order, phi;
    };
    std::vector<DivisorRecord> divisors;
    Verdict verdict = Verdict::Unknown;
};
CyclicReport cyclic_criterion(uint64_t n, uint64_t p);

// When the Sylow p-subgroup P of G is normal, Z_(p)G is semiperfect iff
// Z_(p)[G/P] is; returns the criterion report for the quotient (with the
// reduction recorded in the trail), or nullopt when P is not normal.
std::optional<CriterionReport> reduce_by_normal_sylow(const FiniteGroup& g, uint64_t p,
                                                      uint64_t seed = 0);

} // namespace zpg
