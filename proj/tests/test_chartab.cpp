#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "zpg/chartab.hpp"
#include "zpg/error.hpp"
#include "zpg/group.hpp"

using namespace zpg;

namespace {

Cyclotomic cyc(uint32_t n, long v) { return Cyclotomic(n, Rational(v)); }

// Closed form for the cyclic group C_n: the characters are chi_j(x^k) =
// zeta_n^{jk}, one row per j.  This is an independent oracle for dixon_table.
CharacterTable cyclic_oracle(const FiniteGroup& g) {
    const uint32_t n = static_cast<uint32_t>(g.order());
    uint32_t gen = 0;
    for (uint32_t x = 0; x < n; ++x)
        if (g.element_order(x) == n) {
            gen = x;
            break;
        }
    CharacterTable t;
    t.group = &g;
    t.conductor = n;
    for (uint32_t j = 0; j < n; ++j) {
        std::vector<Cyclotomic> row(n, Cyclotomic(n));
        for (uint32_t k = 0; k < n; ++k) {
            uint32_t cls = g.class_of(g.power(gen, k));
            row[cls] = Cyclotomic::zeta_power(n, static_cast<int64_t>(j) * k);
        }
        t.labels.push_back("x" + std::to_string(j));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<size_t> degrees_of(const CharacterTable& t) {
    std::vector<size_t> d;
    for (size_t i = 0; i < t.rows.size(); ++i) d.push_back(t.degree(i));
    return d;
}

// chi(1)=1, chi(-1)=1, values eps_i, eps_j, eps_k on the three order-4
// classes; the quaternion table is symmetric under permuting those classes,
// so the hand-built rows are valid for any class labeling.
CharacterTable quaternion_oracle(const FiniteGroup& g) {
    CharacterTable t;
    t.group = &g;
    t.conductor = 4;
    auto row = [&](long a, long b, long c, long d, long e) {
        return std::vector<Cyclotomic>{cyc(4, a), cyc(4, b), cyc(4, c), cyc(4, d), cyc(4, e)};
    };
    t.labels = {"t", "u", "v", "w", "q"};
    t.rows = {row(1, 1, 1, 1, 1), row(1, 1, 1, -1, -1), row(1, 1, -1, 1, -1),
              row(1, 1, -1, -1, 1), row(2, -2, 0, 0, 0)};
    return t;
}

} // namespace

TEST_CASE("cyclic tables match the closed-form oracle") {
    for (const char* name : {"C1", "C2", "C3", "C4", "C5", "C6", "C8", "C12"}) {
        CAPTURE(name);
        FiniteGroup g = FiniteGroup::builtin(name);
        CharacterTable oracle = cyclic_oracle(g);
        CHECK_NOTHROW(verify_table(oracle));
        CharacterTable computed = dixon_table(g);
        CHECK(same_characters(oracle, computed));
        CHECK(computed.conductor == g.exponent());
    }
}

TEST_CASE("computed tables are independent of the seed, entry for entry") {
    FiniteGroup a5 = FiniteGroup::builtin("A5");
    CharacterTable t0 = dixon_table(a5, 0);
    CharacterTable t1 = dixon_table(a5, 987654321);
    CHECK(t0.labels == t1.labels);
    CHECK(t0.rows == t1.rows);

    FiniteGroup s4 = FiniteGroup::builtin("S4");
    CHECK(dixon_table(s4, 1).rows == dixon_table(s4, 2).rows);
}

TEST_CASE("symmetric group on three letters, frozen values") {
    FiniteGroup g = FiniteGroup::builtin("S3");
    CharacterTable t = dixon_table(g);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.conductor == 6);
    CHECK(t.labels == std::vector<std::string>{"chi1", "chi2", "chi3"});
    // classes in group order: identity, transpositions, 3-cycles
    CHECK(t.rows[0] == std::vector<Cyclotomic>{cyc(6, 1), cyc(6, 1), cyc(6, 1)});
    CHECK(t.rows[1] == std::vector<Cyclotomic>{cyc(6, 1), cyc(6, -1), cyc(6, 1)});
    CHECK(t.rows[2] == std::vector<Cyclotomic>{cyc(6, 2), cyc(6, 0), cyc(6, -1)});
}

TEST_CASE("quaternion group matches the hand-built table") {
    FiniteGroup g = FiniteGroup::builtin("Q8");
    CharacterTable oracle = quaternion_oracle(g);
    CHECK_NOTHROW(verify_table(oracle));
    CharacterTable t = dixon_table(g);
    CHECK(same_characters(oracle, t));
    CHECK(degrees_of(t) == std::vector<size_t>{1, 1, 1, 1, 2});
    // the two-dimensional character: 2, -2 at the central involution, 0 elsewhere
    CHECK(t.rows[4][0] == cyc(4, 2));
    CHECK(t.rows[4][1] == cyc(4, -2));
    for (size_t c = 2; c < 5; ++c) CHECK(t.rows[4][c].is_zero());
}

TEST_CASE("alternating group on five letters, frozen values") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(g);
    REQUIRE(t.rows.size() == 5);
    CHECK(t.conductor == 30);
    CHECK(degrees_of(t) == std::vector<size_t>{1, 3, 3, 4, 5});

    // columns: identity, 15 involutions, 20 three-cycles, two classes of
    // five-cycles; golden-ratio values on the latter
    Cyclotomic phi = Cyclotomic::from_terms(30, {{12, Rational(-1)}, {18, Rational(-1)}});
    Cyclotomic phibar = Cyclotomic(30, Rational(1)) - phi;
    CHECK(phi * phi == phi + Cyclotomic(30, Rational(1)));   // x^2 = x + 1

    for (size_t r : {1, 2}) {
        CHECK(t.rows[r][0] == cyc(30, 3));
        CHECK(t.rows[r][1] == cyc(30, -1));
        CHECK(t.rows[r][2] == cyc(30, 0));
    }
    CHECK(((t.rows[1][3] == phi && t.rows[1][4] == phibar) ||
           (t.rows[1][3] == phibar && t.rows[1][4] == phi)));
    CHECK(t.rows[1][3] == t.rows[2][4]);
    CHECK(t.rows[1][4] == t.rows[2][3]);

    CHECK(t.rows[3] == std::vector<Cyclotomic>{cyc(30, 4), cyc(30, 0), cyc(30, 1), cyc(30, -1),
                                               cyc(30, -1)});
    CHECK(t.rows[4] == std::vector<Cyclotomic>{cyc(30, 5), cyc(30, 1), cyc(30, -1), cyc(30, 0),
                                               cyc(30, 0)});
}

TEST_CASE("degree multisets of a few larger tables") {
    CHECK(degrees_of(dixon_table(FiniteGroup::builtin("S5"))) ==
          std::vector<size_t>{1, 1, 4, 4, 5, 5, 6});
    CHECK(degrees_of(dixon_table(FiniteGroup::builtin("A4"))) ==
          std::vector<size_t>{1, 1, 1, 3});
    CHECK(degrees_of(dixon_table(FiniteGroup::builtin("D4"))) ==
          std::vector<size_t>{1, 1, 1, 1, 2});
    CHECK(degrees_of(dixon_table(FiniteGroup::builtin("D6"))) ==
          std::vector<size_t>{1, 1, 1, 1, 2, 2});
}

TEST_CASE("structural verification rejects corrupted tables") {
    FiniteGroup g = FiniteGroup::builtin("S3");
    CharacterTable good = dixon_table(g);
    CHECK_NOTHROW(verify_table(good));

    CharacterTable bad = good;
    bad.rows[1][1] = cyc(6, 1);   // sign character flattened onto the trivial one
    CHECK_THROWS_AS(verify_table(bad), OrthogonalityFailure);

    bad = good;
    bad.rows[2][0] = cyc(6, 3);   // degree 3: squares sum to 11, not 6
    CHECK_THROWS_AS(verify_table(bad), DegreeSumFailure);

    bad = good;
    std::swap(bad.rows[0], bad.rows[2]);   // trivial character no longer first
    CHECK_THROWS_AS(verify_table(bad), SemanticError);

    bad = good;
    bad.labels[1] = bad.labels[0];
    CHECK_THROWS_AS(verify_table(bad), SemanticError);

    bad = good;
    bad.rows.pop_back();
    bad.labels.pop_back();
    CHECK_THROWS_AS(verify_table(bad), SemanticError);

    bad = good;
    bad.conductor = 5;
    CHECK_THROWS_AS(verify_table(bad), SemanticError);
}

TEST_CASE("galois orbits") {
    FiniteGroup a5 = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(a5);
    CHECK(galois_orbits(t) ==
          std::vector<std::vector<size_t>>{{0}, {1, 2}, {3}, {4}});

    FiniteGroup c5 = FiniteGroup::builtin("C5");
    CHECK(galois_orbits(dixon_table(c5)) ==
          std::vector<std::vector<size_t>>{{0}, {1, 2, 3, 4}});

    FiniteGroup q8 = FiniteGroup::builtin("Q8");
    CHECK(galois_orbits(dixon_table(q8)).size() == 5);   // fully rational table

    FiniteGroup c8 = FiniteGroup::builtin("C8");
    std::vector<size_t> sizes;
    for (const auto& o : galois_orbits(dixon_table(c8))) sizes.push_back(o.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 1, 2, 4});
}

TEST_CASE("galois twist action on rows") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(g);
    // sigma_7 restricts to zeta_5 -> zeta_5^2 and swaps the golden-ratio pair
    CHECK(galois_twist_row(t, 1, 7) == 2);
    CHECK(galois_twist_row(t, 2, 7) == 1);
    CHECK(galois_twist_row(t, 3, 7) == 3);
    CHECK(galois_twist_row(t, 0, 11) == 0);
    // sigma_11 fixes zeta_5, hence each row
    CHECK(galois_twist_row(t, 1, 11) == 1);
    CHECK_THROWS_AS(galois_twist_row(t, 1, 2), NotCoprime);   // gcd(2, 30) != 1

    // a table missing half a conjugate pair is not Galois closed
    CharacterTable partial;
    partial.group = t.group;
    partial.conductor = t.conductor;
    partial.labels = {"a", "b"};
    partial.rows = {t.rows[0], t.rows[1]};
    CHECK_THROWS_AS(galois_twist_row(partial, 1, 7), SemanticError);
}

TEST_CASE("inertness of p in the character field") {
    FiniteGroup a5 = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(a5);
    // Q(chi) = Q(sqrt 5) for the three-dimensional pair: p inert iff p = ±2 mod 5
    for (uint64_t p : {7, 13, 17, 23, 37, 43, 47, 53, 67, 73, 83, 97})
        CHECK(p_inert_for_row(t, 1, p));
    for (uint64_t p : {11, 19, 29, 31, 41, 59, 61, 71, 79, 89})
        CHECK_FALSE(p_inert_for_row(t, 1, p));
    // rational rows are inert for every admissible p
    for (size_t r : {0, 3, 4}) {
        CHECK(p_inert_for_row(t, r, 7));
        CHECK(p_inert_for_row(t, r, 11));
    }
    CHECK_THROWS_AS(p_inert_for_row(t, 1, 2), PrimeDividesOrder);
    CHECK_THROWS_AS(p_inert_for_row(t, 1, 5), PrimeDividesOrder);

    FiniteGroup c5 = FiniteGroup::builtin("C5");
    CharacterTable tc = dixon_table(c5);
    CHECK(p_inert_for_row(tc, 1, 2));        // 2 generates (Z/5)*
    CHECK(p_inert_for_row(tc, 1, 7));
    CHECK_FALSE(p_inert_for_row(tc, 1, 11)); // 11 = 1 mod 5
    CHECK_FALSE(p_inert_for_row(tc, 1, 19)); // order 2 < 4

    // (Z/8)* is not cyclic: no prime is inert for a faithful character of C8
    FiniteGroup c8 = FiniteGroup::builtin("C8");
    CharacterTable t8 = dixon_table(c8);
    for (const auto& o : galois_orbits(t8)) {
        if (o.size() != 4) continue;
        for (uint64_t p : {3, 5, 7, 11, 13, 17})
            CHECK_FALSE(p_inert_for_row(t8, o.front(), p));
    }
}

TEST_CASE("same_characters requires a common group object") {
    FiniteGroup g1 = FiniteGroup::builtin("C5");
    FiniteGroup g2 = FiniteGroup::builtin("C5");
    CharacterTable t1 = dixon_table(g1);
    CharacterTable t2 = dixon_table(g2);
    CHECK_THROWS_AS(same_characters(t1, t2), DomainMismatch);
    CHECK(same_characters(t1, dixon_table(g1)));
}

TEST_CASE("frobenius-schur indicators") {
    FiniteGroup a5 = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(a5);
    for (size_t r = 0; r < 5; ++r) CHECK(fs_indicator(t, r) == 1);

    FiniteGroup q8 = FiniteGroup::builtin("Q8");
    CharacterTable tq = dixon_table(q8);
    for (size_t r = 0; r < 4; ++r) CHECK(fs_indicator(tq, r) == 1);
    CHECK(fs_indicator(tq, 4) == -1);   // quaternionic two-dimensional character

    FiniteGroup d4 = FiniteGroup::builtin("D4");
    CharacterTable td = dixon_table(d4);
    CHECK(fs_indicator(td, 4) == 1);    // dihedral counterpart is real

    FiniteGroup c3 = FiniteGroup::builtin("C3");
    CharacterTable tc = dixon_table(c3);
    CHECK(fs_indicator(tc, 0) == 1);
    CHECK(fs_indicator(tc, 1) == 0);    // complex character
    CHECK(fs_indicator(tc, 2) == 0);
}

TEST_CASE("schur probe certifies index one where a witness exists") {
    FiniteGroup a5 = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(a5);
    for (size_t r = 0; r < 5; ++r) {
        SchurProbe pr = schur_probe(t, r);
        CHECK(pr.verdict == SchurVerdict::One);
        CHECK_FALSE(pr.witness.empty());
    }
    // the four-dimensional character needs the natural point action: every
    // cyclic-subgroup multiplicity is even
    SchurProbe p4 = schur_probe(t, 3);
    CHECK(p4.witness ==
          "natural permutation character contains the character with multiplicity 1");

    for (const char* name : {"S3", "S4", "S5", "A4", "D4", "D6"}) {
        CAPTURE(name);
        FiniteGroup g = FiniteGroup::builtin(name);
        CharacterTable tg = dixon_table(g);
        for (size_t r = 0; r < tg.rows.size(); ++r)
            CHECK(schur_probe(tg, r).verdict == SchurVerdict::One);
    }
}

TEST_CASE("schur probe flags the quaternion character as index at least two") {
    FiniteGroup g = FiniteGroup::builtin("Q8");
    CharacterTable t = dixon_table(g);
    SchurProbe pr = schur_probe(t, 4);
    CHECK(pr.verdict == SchurVerdict::AtLeastTwo);
    CHECK(pr.indicator == -1);
    for (size_t r = 0; r < 4; ++r)
        CHECK(schur_probe(t, r).verdict == SchurVerdict::One);
}

TEST_CASE("schur probe stays honest on an index-two character with indicator 0") {
    // Q8 x C3: the faithful two-dimensional characters twisted by a cubic
    // character have Schur index 2 but indicator 0; the probe must answer
    // Unknown for them, never One
    FiniteGroup g = FiniteGroup::from_generators(
        "Q8xC3", {Perm::parse_cycles("(1,3,2,4)(5,7,6,8)(9,10,11)", 11),
                  Perm::parse_cycles("(1,5,2,6)(3,8,4,7)", 11)});
    REQUIRE(g.order() == 24);
    CharacterTable t = dixon_table(g);
    REQUIRE(t.rows.size() == 15);

    int quaternionic = 0, unknown = 0;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        if (t.degree(r) != 2) continue;
        SchurProbe pr = schur_probe(t, r);
        if (pr.indicator == -1) {
            CHECK(pr.verdict == SchurVerdict::AtLeastTwo);
            ++quaternionic;
        } else {
            CHECK(pr.indicator == 0);
            CHECK(pr.verdict == SchurVerdict::Unknown);
            ++unknown;
        }
    }
    CHECK(quaternionic == 1);
    CHECK(unknown == 2);
}

TEST_CASE("central idempotents of rational simple components") {
    FiniteGroup s3 = FiniteGroup::builtin("S3");
    CharacterTable t = dixon_table(s3);
    AlgQ e2 = central_idempotent(t, {2});
    CHECK(e2.is_idempotent());
    CHECK(trace_dim(e2) == 4);

    // (1/3)(2 - x - x^2) on the 3-cycles, by hand
    AlgQ expect = AlgQ::zero(*t.group, QDom{});
    for (uint32_t x = 0; x < s3.order(); ++x) {
        uint32_t o = s3.element_order(x);
        if (o == 1) expect.set_coeff(x, Rational(2, 3));
        if (o == 3) expect.set_coeff(x, Rational(-1, 3));
    }
    CHECK(e2 == expect);

    FiniteGroup q8 = FiniteGroup::builtin("Q8");
    CharacterTable tq = dixon_table(q8);
    AlgQ eq = central_idempotent(tq, {4});
    CHECK(eq.is_idempotent());
    CHECK(trace_dim(eq) == 4);
    AlgQ expq = AlgQ::zero(q8, QDom{});
    for (uint32_t x = 0; x < q8.order(); ++x) {
        if (q8.element_order(x) == 1) expq.set_coeff(x, Rational(1, 2));
        if (q8.element_order(x) == 2) expq.set_coeff(x, Rational(-1, 2));
    }
    CHECK(eq == expq);
}

TEST_CASE("orbit idempotents resolve the identity of the rational group algebra") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(g);
    std::vector<std::vector<size_t>> orbits = galois_orbits(t);
    REQUIRE(orbits.size() == 4);

    std::vector<AlgQ> es;
    for (const auto& o : orbits) es.push_back(central_idempotent(t, o));
    std::vector<unsigned long> dims;
    for (const AlgQ& e : es) {
        CHECK(e.is_idempotent());
        dims.push_back(trace_dim(e).get_ui());
    }
    CHECK(dims == std::vector<unsigned long>{1, 18, 16, 25});

    AlgQ sum = AlgQ::zero(g, QDom{});
    for (const AlgQ& e : es) sum = sum + e;
    CHECK(sum == AlgQ::one(g, QDom{}));
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j)
            CHECK((es[i] * es[j]).is_zero());
}

TEST_CASE("central_idempotent rejects partial orbits") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(g);
    CHECK_THROWS_AS(central_idempotent(t, {1}), NotAFullOrbit);
    CHECK_THROWS_AS(central_idempotent(t, {0, 1}), NotAFullOrbit);
    CHECK_THROWS_AS(central_idempotent(t, {}), NotAFullOrbit);
}

TEST_CASE("trivial group") {
    FiniteGroup g = FiniteGroup::builtin("C1");
    CharacterTable t = dixon_table(g);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.degree(0) == 1);
    CHECK(galois_orbits(t) == std::vector<std::vector<size_t>>{{0}});
    CHECK(fs_indicator(t, 0) == 1);
    CHECK(schur_probe(t, 0).verdict == SchurVerdict::One);
    AlgQ e = central_idempotent(t, {0});
    CHECK(e == AlgQ::one(g, QDom{}));
}
