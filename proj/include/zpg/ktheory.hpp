#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpg/algelem.hpp"
#include "zpg/chartab.hpp"
#include "zpg/cyclotomic.hpp"
#include "zpg/group.hpp"

namespace zpg {

// One simple F_pG-module up to isomorphism: its F_p-dimension, the degree s
// of its endomorphism field F_{p^s}, and its Brauer character on the
// p-regular classes.
struct BrauerRow {
    std::string label;
    uint64_t dim = 0;
    uint64_t s = 1;
    std::vector<Cyclotomic> values;
};

// The modular side of the comparison: the simple modules of F_pG with their
// Brauer characters, and optionally the Cartan matrix stored by columns,
// cartan_columns[j][i] = multiplicity of simple i in the projective cover of
// simple j.
struct ModularData {
    const FiniteGroup* group = nullptr;
    uint64_t p = 0;
    uint32_t conductor = 1;                 // p'-part of exp(G)
    std::vector<uint32_t> regular_classes;  // ascending class indices, p-regular
    std::vector<BrauerRow> rows;
    std::optional<std::vector<std::vector<uint64_t>>> cartan_columns;

    // dim of the projective cover of simple j; requires cartan_columns.
    uint64_t projective_dim(size_t j) const;
};

// Structural checks: p prime, regular classes exactly the classes of order
// coprime to p, conductor the p'-part of the exponent, value at the identity
// equal to the dimension, s | dim, the semisimple-quotient dimension bound,
// and (when the Cartan matrix is present) the regular-module dimension audit
// sum_j (dim_j/s_j) dim P_j = |G|.
void verify_modular_data(const ModularData& m);

// For p coprime to |G| the simples are the reductions of the rational
// irreducibles: rows are <sigma_p>-orbit sums of the character table rows,
// s = orbit size, Cartan = identity.
ModularData modular_from_ordinary(const CharacterTable& t, uint64_t p);

// Rows of the decomposition matrix, one per rational irreducible (Galois
// orbit of t), columns following m.rows: each orbit-sum character restricted
// to the p-regular classes, written in the Brauer character basis.  Entries
// are verified nonnegative integers.  Throws SchurUnknown unless every
// orbit's Schur probe certifies index one, NoIntegralSolution when a row
// does not resolve integrally.
struct DecompositionResult {
    std::vector<std::string> row_labels;
    std::vector<std::vector<uint64_t>> rows;   // [orbit][simple]
};
DecompositionResult decomposition_rows(const CharacterTable& t, const ModularData& m);

// Does every target column lie in the nonnegative-integer span of the rows?
// Exhaustive bounded search; exact.  When it holds, coefficients[c] gives one
// expansion of column c; otherwise witness_column identifies the first
// column outside the cone.
struct ConeCertificate {
    bool holds = false;
    std::vector<std::vector<uint64_t>> coefficients;
    std::optional<size_t> witness_column;
};
ConeCertificate cone_inclusion(const std::vector<std::vector<uint64_t>>& rows,
                               const std::vector<std::vector<uint64_t>>& columns);

// Brauer character of the left ideal (F_pG)f: for each listed class, the
// eigenvalues of the class representative acting on the ideal are lifted to
// complex roots of unity through a fixed embedding (the lexicographically
// least irreducible factor of the conductor's cyclotomic polynomial mod p)
// and summed.  f must be idempotent.
std::vector<Cyclotomic> brauer_character_of_left_ideal(
    const AlgFp& f, uint32_t conductor, const std::vector<uint32_t>& regular_classes);

// Coordinates of a class function on the p-regular classes in the basis of
// the Brauer character rows, solved exactly over Q; nullopt when the function
// is outside their span.  All values must live at work_conductor, a multiple
// of m.conductor.
std::optional<std::vector<Rational>> brauer_coordinates(
    const ModularData& m, const std::vector<Cyclotomic>& values,
    uint32_t work_conductor);

// Assemble the Cartan matrix from an orthogonal decomposition of 1 into
// primitive idempotents.  Idempotents are fused into isomorphism types by
// (left ideal dimension, fingerprint, solved composition vector) -- all three
// are isomorphism invariants, and the composition vector separates covers the
// cheaper two cannot (they coincide for both projectives of F_3 S3).  Each
// type's composition is solved from its Brauer character, cross-checked
// against the scaled hom-space dimensions hom_dim(f_i, f_j)/s_i, and the
// types are matched to m.rows by the multiplicity law dim_j = s_j * (number
// of copies).  Output columns are aligned with m.rows.
struct CartanResult {
    std::vector<std::vector<uint64_t>> columns;   // columns[j][i], aligned to m.rows
    std::vector<uint64_t> multiplicities;         // copies of each projective in F_pG
    std::vector<size_t> row_of_idempotent;        // per input idempotent
};
CartanResult cartan_from_idempotents(const std::vector<AlgFp>& decomposition,
                                     const ModularData& m);

// Closure of the classical triangle for explicit lifted idempotents: the
// rational character of QG*e restricted to the p-regular classes must equal
// the lifted-eigenvalue character of the reduction, and that character must
// resolve to exactly one declared Cartan column of matching dimension.
// Throws TriangleMismatch otherwise; requires m.cartan_columns.
struct TriangleReport {
    std::vector<std::string> matched_labels;   // per idempotent: covered simple
    std::vector<uint64_t> dims;                // dim of the rational left ideal
};
TriangleReport cartan_brauer_consistency(const ModularData& m,
                                         const std::vector<AlgQ>& lifted);

} // namespace zpg
