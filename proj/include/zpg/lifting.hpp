#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zpg/algelem.hpp"
#include "zpg/group.hpp"
#include "zpg/ktheory.hpp"

namespace zpg {

// Tuning for the randomized primitive-decomposition search.
struct SplitOptions {
    // Consecutive failed split attempts before an idempotent is accepted as
    // primitive.  A splittable corner ring f*A*f yields a proper idempotent
    // power with probability bounded away from zero per random trial, so the
    // false-accept chance decays geometrically in this limit.
    uint32_t stall_limit = 40;
    // Total random trials across the whole search before BudgetExhausted.
    uint64_t trial_budget = 200000;
    // Optional cross-check: when modular data with Cartan columns is supplied,
    // the search only stops once the dimension multiset of the decomposition
    // matches the projective dimensions it predicts, and may stop early as
    // soon as they match (matching the full multiset forces primitivity by
    // Krull-Schmidt uniqueness).
    const ModularData* expected = nullptr;
};

// For a in F_pG, returns the idempotent power a^k (k with a^{2k} = a^k): the
// projector onto the invertible part of a inside F_p[a].  k is assembled from
// the irreducible-factor degrees t of the characteristic polynomial of
// right-multiplication by a, as p^s * lcm(p^t - 1) with p^s >= |G|, and the
// power is computed by iterated squaring.  Nilpotent a gives 0, invertible a
// gives the identity.
AlgFp idempotent_power(const AlgFp& a);

// Orthogonal primitive idempotents of F_pG summing to 1, found by repeatedly
// splitting each summand f via idempotent powers of random elements of f*A*f.
// Deterministic given seed; the result is sorted by (ideal dimension,
// coefficient vector).  Requires |G| <= 2000.  Throws BudgetExhausted when the
// trial budget runs out before the stopping rule is satisfied.
std::vector<AlgFp> fp_primitive_decomposition(const FiniteGroup& g, uint64_t p,
                                              uint64_t seed,
                                              const SplitOptions& opts = {});

// One quadratic refinement step e -> 3e^2 - 2e^3: takes an approximate
// idempotent mod q (checked; NotApproxIdempotent otherwise) and returns an
// element mod q^2 that is an approximate idempotent mod q^2 and congruent to
// the input mod q.  The iterate stays inside the commutative subring generated
// by the chosen coefficient preimage.
AlgMod hensel_step(const AlgMod& e);

// A verified rational idempotent certificate for one projective type.
struct LiftReport {
    std::string group_name;
    uint64_t p = 0;
    std::string label;          // row label of the targeted projective type
    AlgQ idempotent;            // exact rational certificate
    uint64_t precision = 0;     // residue exponent K: reconstruction used p^K
    bool idempotent_exact = false;
    bool p_integral = false;
    bool reduction_matches = false;  // reduction mod p equals the chosen seed idempotent
    uint64_t dim = 0;           // |G| * identity coefficient = dim QG*e
    uint64_t seed = 0;
};

struct LiftOutcome {
    std::optional<LiftReport> report;   // empty: no certificate found
    uint64_t precision_reached = 0;     // highest residue exponent examined
    uint32_t retries_used = 0;
};

// End-to-end pipeline for one projective type of F_pG: primitive
// decomposition, Cartan-based labeling, quadratic lifting with doubling
// residue exponent up to precision_max, coefficientwise rational
// reconstruction, and full exact verification of every candidate.  Retries
// re-randomize the coefficient preimage (adding p times a random element
// before polishing) and rotate through conjugate representatives of the type.
// A missing report is not evidence that no rational lift exists.  height_bound
// > 0 additionally caps the numerator/denominator size accepted from
// reconstruction.  Throws UnknownLabel if label names no row of m.
LiftOutcome lift_pim(const FiniteGroup& g, uint64_t p, const ModularData& m,
                     const std::string& label, uint64_t seed,
                     uint64_t precision_max = 4096,
                     const mpz_class& height_bound = 0,
                     uint32_t retry_budget = 10);

// The classical symmetrizer idempotent of a standard tableau: with n = |λ|,
// e = (f/n!) * (row symmetrizer) * (signed column symmetrizer), where f is the
// hook-length dimension count.  sn must be the symmetric group acting
// naturally on n points (e.g. FiniteGroup::builtin("S5")); entries of the
// tableau are 1-based points.  Throws NotAPartition / NotStandardTableau on
// malformed input, DomainMismatch if sn is not S_n.
AlgQ young_idempotent(const FiniteGroup& sn, const std::vector<uint32_t>& partition,
                      const std::vector<std::vector<uint32_t>>& tableau);

// Per-column outcome of verifying a table of claimed idempotent certificates.
struct IdemColumnCheck {
    std::string declared_label;
    bool idempotent = false;      // e*e == e exactly over Q
    bool p_integral = false;      // no denominator divisible by p
    uint64_t dim = 0;             // trace-identity dimension (0 if unchecked)
    std::string identified_label; // projective type of the mod-p reduction; "" if none
    bool label_matches = false;
    bool dim_matches = false;     // dim equals the identified type's dimension
};

struct IdemTableReport {
    std::string group_name;
    uint64_t p = 0;
    std::vector<IdemColumnCheck> columns;
    bool all_ok = false;
};

// Re-verifies a table of (label, rational element) certificate columns against
// modular data m: exact idempotency, p-integrality, trace dimension, and
// identification of each reduction's projective type by ideal dimension,
// fingerprint, and lifted character, compared with a reference decomposition
// computed at the given seed.
IdemTableReport verify_idemtable(const FiniteGroup& g, uint64_t p,
                                 const std::vector<std::pair<std::string, AlgQ>>& columns,
                                 const ModularData& m, uint64_t seed = 0);

} // namespace zpg
