#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "zpg/error.hpp"
#include "zpg/group.hpp"
#include "zpg/ordcrit.hpp"
#include "zpg/polyfp.hpp"
#include "zpg/polyq.hpp"

using namespace zpg;

TEST_CASE("alternating group on five letters: verdict tracks p mod 5") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(g);
    int positive = 0;
    for (uint64_t p = 7; p <= 97; ++p) {
        if (p % 2 == 0 || p % 3 == 0 || p % 5 == 0) continue;
        bool prime = true;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        CriterionReport rep = criterion_from_table(t, p);
        bool expect = (p % 5 == 2 || p % 5 == 3);   // p = ±2 mod 5: inert in Q(sqrt 5)
        CAPTURE(p);
        CHECK((rep.verdict == Verdict::Semiperfect) == expect);
        CHECK(rep.verdict != Verdict::Unknown);
        if (expect) ++positive;
    }
    CHECK(positive == 12);
}

TEST_CASE("per-orbit records carry the obstruction") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CharacterTable t = dixon_table(g);

    CriterionReport good = criterion_from_table(t, 7);
    REQUIRE(good.orbits.size() == 4);
    CHECK(good.group_name == "A5");
    CHECK(good.p == 7);
    for (const OrbitRecord& rec : good.orbits) {
        CHECK(rec.inert);
        CHECK(rec.schur.verdict == SchurVerdict::One);
    }
    CHECK(good.orbits[1].labels == std::vector<std::string>{"chi2", "chi3"});
    CHECK(good.orbits[1].field_degree == 2);
    CHECK(good.reduction_trail.empty());

    CriterionReport bad = criterion_from_table(t, 11);
    CHECK(bad.verdict == Verdict::NotSemiperfect);
    for (const OrbitRecord& rec : bad.orbits) {
        bool quadratic = rec.field_degree == 2;
        CHECK(rec.inert == !quadratic);   // only the golden-ratio pair splits at 11
        CHECK(rec.schur.verdict == SchurVerdict::One);
    }
}

TEST_CASE("quaternion group is never semiperfect away from 2") {
    FiniteGroup g = FiniteGroup::builtin("Q8");
    CharacterTable t = dixon_table(g);
    for (uint64_t p : {3, 5, 7, 11, 13, 17}) {
        CriterionReport rep = criterion_from_table(t, p);
        CHECK(rep.verdict == Verdict::NotSemiperfect);
        bool saw_quaternionic = false;
        for (const OrbitRecord& rec : rep.orbits)
            if (rec.schur.verdict == SchurVerdict::AtLeastTwo) saw_quaternionic = true;
        CHECK(saw_quaternionic);
    }
}

TEST_CASE("an unresolved schur index blocks only the positive direction") {
    // Q8 x C3 carries a quaternionic character (AtLeastTwo) plus two probes
    // answering Unknown; the verdict must still be NotSemiperfect
    FiniteGroup g = FiniteGroup::from_generators(
        "Q8xC3", {Perm::parse_cycles("(1,3,2,4)(5,7,6,8)(9,10,11)", 11),
                  Perm::parse_cycles("(1,5,2,6)(3,8,4,7)", 11)});
    CharacterTable t = dixon_table(g);
    for (uint64_t p : {5, 7, 11, 13}) {
        CriterionReport rep = criterion_from_table(t, p);
        CHECK(rep.verdict == Verdict::NotSemiperfect);
    }
}

TEST_CASE("cyclic criterion: frozen verdicts") {
    CHECK(cyclic_criterion(1, 2).verdict == Verdict::Semiperfect);
    CHECK(cyclic_criterion(1, 97).verdict == Verdict::Semiperfect);
    CHECK(cyclic_criterion(7, 3).verdict == Verdict::Semiperfect);    // 3 generates (Z/7)*
    CHECK(cyclic_criterion(7, 2).verdict == Verdict::NotSemiperfect); // ord = 3 < 6
    CHECK(cyclic_criterion(9, 2).verdict == Verdict::Semiperfect);    // ord_9(2) = 6
    CHECK(cyclic_criterion(5, 2).verdict == Verdict::Semiperfect);
    CHECK(cyclic_criterion(5, 3).verdict == Verdict::Semiperfect);
    CHECK(cyclic_criterion(5, 11).verdict == Verdict::NotSemiperfect);
    CHECK(cyclic_criterion(5, 19).verdict == Verdict::NotSemiperfect);
    // (Z/8)* and (Z/12)* are not cyclic: no prime works
    for (uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
        CHECK(cyclic_criterion(8, p).verdict == Verdict::NotSemiperfect);
    for (uint64_t p : {5, 7, 11, 13})
        CHECK(cyclic_criterion(12, p).verdict == Verdict::NotSemiperfect);
}

TEST_CASE("cyclic criterion: divisor records expose the failing level") {
    CyclicReport rep = cyclic_criterion(12, 5);
    REQUIRE(rep.divisors.size() == 6);
    std::vector<uint64_t> ds, ords, phis;
    for (const auto& d : rep.divisors) {
        ds.push_back(d.d);
        ords.push_back(d.order);
        phis.push_back(d.phi);
    }
    CHECK(ds == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(ords == std::vector<uint64_t>{1, 1, 2, 1, 2, 2});
    CHECK(phis == std::vector<uint64_t>{1, 1, 2, 2, 2, 4});
    CHECK(rep.verdict == Verdict::NotSemiperfect);
}

TEST_CASE("cyclic criterion input guards") {
    CHECK_THROWS_AS(cyclic_criterion(6, 2), PrimeDividesOrder);
    CHECK_THROWS_AS(cyclic_criterion(6, 3), PrimeDividesOrder);
    CHECK_THROWS_AS(cyclic_criterion(5, 4), SemanticError);
    CHECK_THROWS_AS(cyclic_criterion(5, 1), SemanticError);
    CHECK_THROWS_AS(cyclic_criterion(0, 3), SemanticError);
    FiniteGroup g = FiniteGroup::builtin("A5");
    CHECK_THROWS_AS(semiperfect_ordinary(g, 2), PrimeDividesOrder);
    CHECK_THROWS_AS(semiperfect_ordinary(g, 9), SemanticError);
}

TEST_CASE("three independent routes agree on cyclic groups") {
    // route 1: unit-order arithmetic (cyclic_criterion)
    // route 2: the character-table criterion on C_n
    // route 3: z^n - 1 factors into irreducibles over F_p exactly when every
    //          cyclotomic level stays irreducible
    for (uint64_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20}) {
        FiniteGroup g = FiniteGroup::builtin("C" + std::to_string(n));
        REQUIRE(g.order() == n);
        CharacterTable t = dixon_table(g);
        for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
            if (n % p == 0) continue;
            CAPTURE(n);
            CAPTURE(p);
            CyclicReport arith = cyclic_criterion(n, p);
            CriterionReport tab = criterion_from_table(t, p);
            CHECK(arith.verdict == tab.verdict);
            CHECK(tab.verdict != Verdict::Unknown);

            bool all_irreducible = true;
            for (uint64_t d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                PolyFp f = polyq_reduce_mod_p(cyclotomic_polynomial(
                                                  static_cast<uint32_t>(d)), p);
                if (factor_poly_fp(f).size() != 1) all_irreducible = false;
            }
            CHECK((arith.verdict == Verdict::Semiperfect) == all_irreducible);
        }
    }
}

TEST_CASE("abelian groups behave like the cyclic group on their exponent") {
    FiniteGroup v4 = FiniteGroup::from_generators(
        "V4", {Perm::parse_cycles("(1,2)(3,4)", 4), Perm::parse_cycles("(1,3)(2,4)", 4)});
    REQUIRE(v4.order() == 4);
    FiniteGroup c2x4 = FiniteGroup::from_generators(
        "C2xC4", {Perm::parse_cycles("(1,2)", 6), Perm::parse_cycles("(3,4,5,6)", 6)});
    REQUIRE(c2x4.order() == 8);
    for (uint64_t p : {3, 5, 7, 11, 13}) {
        CHECK(semiperfect_ordinary(v4, p).verdict ==
              cyclic_criterion(v4.exponent(), p).verdict);
        CHECK(semiperfect_ordinary(c2x4, p).verdict ==
              cyclic_criterion(c2x4.exponent(), p).verdict);
    }
    // concrete instance: exponent 4, and 5 = 1 mod 4 splits Q(i)
    CHECK(semiperfect_ordinary(c2x4, 3).verdict == Verdict::Semiperfect);
    CHECK(semiperfect_ordinary(c2x4, 5).verdict == Verdict::NotSemiperfect);
}

TEST_CASE("normal sylow reduction") {
    FiniteGroup s3 = FiniteGroup::builtin("S3");
    auto rep = reduce_by_normal_sylow(s3, 3);
    REQUIRE(rep.has_value());
    CHECK(rep->group_name == "S3/Syl3");
    CHECK(rep->verdict == Verdict::Semiperfect);
    CHECK(rep->reduction_trail == std::vector<std::string>{"S3 -> S3/Syl3"});
    CHECK_FALSE(reduce_by_normal_sylow(s3, 2).has_value());

    FiniteGroup a4 = FiniteGroup::builtin("A4");
    auto rep2 = reduce_by_normal_sylow(a4, 2);
    REQUIRE(rep2.has_value());
    CHECK(rep2->verdict == Verdict::Semiperfect);   // C3 at p = 2: 2 generates (Z/3)*
    CHECK_FALSE(reduce_by_normal_sylow(a4, 3).has_value());

    FiniteGroup a5 = FiniteGroup::builtin("A5");
    for (uint64_t p : {2, 3, 5}) CHECK_FALSE(reduce_by_normal_sylow(a5, p).has_value());

    FiniteGroup s4 = FiniteGroup::builtin("S4");
    CHECK_FALSE(reduce_by_normal_sylow(s4, 2).has_value());
    CHECK_FALSE(reduce_by_normal_sylow(s4, 3).has_value());

    FiniteGroup q8 = FiniteGroup::builtin("Q8");
    auto rep3 = reduce_by_normal_sylow(q8, 2);
    REQUIRE(rep3.has_value());   // quotient is trivial
    CHECK(rep3->verdict == Verdict::Semiperfect);

    FiniteGroup d6 = FiniteGroup::builtin("D6");
    auto rep4 = reduce_by_normal_sylow(d6, 3);
    REQUIRE(rep4.has_value());   // quotient C2 x C2 at p = 3
    CHECK(rep4->verdict == Verdict::Semiperfect);

    // trivial Sylow subgroup is normal: reduction falls through to the group itself
    auto rep5 = reduce_by_normal_sylow(s3, 5);
    REQUIRE(rep5.has_value());
    CHECK(rep5->verdict == Verdict::Semiperfect);
    CHECK(rep5->reduction_trail.size() == 1);
}

TEST_CASE("reports are deterministic across seeds") {
    FiniteGroup g = FiniteGroup::builtin("A5");
    CriterionReport a = semiperfect_ordinary(g, 7, 0);
    CriterionReport b = semiperfect_ordinary(g, 7, 31337);
    CHECK(a.verdict == b.verdict);
    REQUIRE(a.orbits.size() == b.orbits.size());
    for (size_t i = 0; i < a.orbits.size(); ++i) {
        CHECK(a.orbits[i].labels == b.orbits[i].labels);
        CHECK(a.orbits[i].inert == b.orbits[i].inert);
        CHECK(a.orbits[i].schur.witness == b.orbits[i].schur.witness);
    }
}
