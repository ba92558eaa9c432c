#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "zpg/algelem.hpp"
#include "zpg/cyclotomic.hpp"
#include "zpg/group.hpp"

namespace zpg {

// An ordinary (complex) character table with values in Q(zeta_conductor),
// conductor = exp(G).  Row i gives the values of one irreducible character on
// the group's conjugacy classes, in the group's class order; row 0 is the
// trivial character.
struct CharacterTable {
    const FiniteGroup* group = nullptr;
    uint32_t conductor = 1;
    std::vector<std::string> labels;
    std::vector<std::vector<Cyclotomic>> rows;

    size_t degree(size_t row) const;   // chi(1) as a size_t (verified integral)
};

// Exact structural checks: square table, trivial first row, positive integer
// degrees with sum of squares |G|, row orthogonality
//   sum_c |c| chi(c) chi'(c^-1) = delta * |G|,
// and column orthogonality against the inverse class
//   sum_chi chi(c) chi(c'^-1) = delta_{c,c'} * |G|/|c|.
// Throws OrthogonalityFailure / DegreeSumFailure / SemanticError.
void verify_table(const CharacterTable& t);

// Row permutation giving the canonical order: trivial character first, the
// rest by (degree, coefficientwise lexicographic on the value vector).
std::vector<size_t> canonical_row_order(const CharacterTable& t);

// True when the two tables contain the same characters (rows compared in
// canonical order, class by class; labels ignored).
bool same_characters(const CharacterTable& a, const CharacterTable& b);

// Row index of chi^sigma_k, where chi^sigma_k(c) = sigma_k(chi(c)); throws
// SemanticError if the table is not closed under the Galois action.
size_t galois_twist_row(const CharacterTable& t, size_t row, int64_t k);

// Partition of {0..rows-1} into Galois orbits under all sigma_k with
// gcd(k, conductor) = 1; each orbit sorted ascending, orbits sorted by first
// element.  Orbit size = [Q(chi) : Q].
std::vector<std::vector<size_t>> galois_orbits(const CharacterTable& t);

// True iff p is inert in Q(chi), decided by whether the <sigma_p>-orbit of
// the row exhausts its full Galois orbit.  Requires p coprime to |G|
// (PrimeDividesOrder otherwise; ramification cannot occur).
bool p_inert_for_row(const CharacterTable& t, size_t row, uint64_t p);

// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2), in {-1, 0, 1}.
// Throws IndicatorNotIntegral if the sum does not divide out.
int fs_indicator(const CharacterTable& t, size_t row);

enum class SchurVerdict { One, AtLeastTwo, Unknown };

struct SchurProbe {
    SchurVerdict verdict = SchurVerdict::Unknown;
    int indicator = 0;
    std::string witness;   // certifying rational character, or the indicator
};

// Partial Schur-index oracle.  One is certified by exhibiting a rational
// character containing chi with multiplicity gcd 1 (permutation characters of
// cyclic subgroups and of the natural point action); AtLeastTwo by indicator
// -1; otherwise Unknown.  Never guesses.
SchurProbe schur_probe(const CharacterTable& t, size_t row);

// Central idempotent of the rational simple component belonging to a full
// Galois orbit: e = (chi(1)/|G|) sum_g (sum_{orbit} chi)(g^-1) g.
// Throws NotAFullOrbit unless the index set is exactly one Galois orbit.
AlgQ central_idempotent(const CharacterTable& t, const std::vector<size_t>& orbit);

// Burnside/Dixon class-matrix computation of the full table over F_q for the
// smallest prime q with q ≡ 1 mod exp(G) and q > 2 sqrt(|G|), eigenvalues
// lifted through a fixed primitive root.  Output is canonically ordered,
// labeled chi1..chik, and passes verify_table.  Throws NoSuitablePrime when
// the prime search bound is exhausted.
CharacterTable dixon_table(const FiniteGroup& g, uint64_t seed = 0);

} // namespace zpg
