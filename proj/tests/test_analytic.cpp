#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlg/analytic.hpp"

using namespace nlg;

TEST_CASE("theorem1 branch values") {
    CHECK(theorem1(rat(1, 3), GameRelation::Equivalent) == rat(1, 3));
    CHECK(theorem1(rat(1, 3), GameRelation::TriviallyComplementary) == rat(2, 3));
    CHECK(theorem1(rat(0), GameRelation::Distinct) == rat(1, 2));
    CHECK(theorem1(rat(1, 4), GameRelation::Distinct) == rat(3, 4));
    CHECK(theorem1(rat(1, 2), GameRelation::Distinct) == rat(1));
    CHECK(theorem1(rat(3, 4), GameRelation::Distinct) == rat(3, 4));
    CHECK(theorem1(rat(1), GameRelation::Distinct) == rat(1, 2));
    CHECK_THROWS_AS(theorem1(rat(-1, 10), GameRelation::Equivalent), std::domain_error);
    CHECK_THROWS_AS(theorem1(rat(11, 10), GameRelation::Equivalent), std::domain_error);
}

TEST_CASE("theorem1 symmetry under complementing the constraint") {
    for (int k = 0; k <= 10; ++k) {
        Rat x = rat(k, 10);
        CHECK(theorem1(x, GameRelation::Distinct) == theorem1(1 - x, GameRelation::Distinct));
        CHECK(theorem1(x, GameRelation::Equivalent) +
                  theorem1(x, GameRelation::TriviallyComplementary) ==
              1);
    }
}

TEST_CASE("theorem2 values") {
    CHECK(theorem2(rat(1, 2)) == 1);
    CHECK(theorem2(rat(5, 8)) == 1);
    CHECK(theorem2(rat(3, 4)) == 1);
    CHECK(theorem2(rat(7, 8)) == rat(3, 4));
    CHECK(theorem2(rat(1)) == rat(1, 2));
    CHECK_THROWS_AS(theorem2(rat(1, 4)), std::domain_error);
    CHECK(theorem2_extended(rat(1, 4)) == theorem2(rat(3, 4)));
    CHECK(theorem2_extended(rat(0)) == rat(1, 2));
    CHECK(theorem2_extended(rat(7, 8)) == theorem2(rat(7, 8)));
}

TEST_CASE("marginal closed form mirrors theorem1") {
    for (int k = 0; k <= 10; ++k) {
        Rat x = rat(k, 10);
        for (auto rel : {GameRelation::Equivalent, GameRelation::TriviallyComplementary,
                         GameRelation::Distinct})
            CHECK(marginal_vs_marginal(x, rel) == theorem1(x, rel));
    }
}

TEST_CASE("sn vs marginal closed form") {
    CHECK(sn_vs_marginal(rat(0)) == rat(3, 4));
    CHECK(sn_vs_marginal(rat(1, 4)) == rat(7, 8));
    CHECK(sn_vs_marginal(rat(1, 2)) == rat(1));
    CHECK(sn_vs_marginal(rat(3, 4)) == rat(7, 8));
    CHECK(sn_vs_marginal(rat(1)) == rat(3, 4));
    for (int k = 0; k <= 8; ++k) {
        Rat p = rat(k, 8);
        CHECK(sn_vs_marginal(p) == sn_vs_marginal(1 - p));
    }
}

TEST_CASE("closed form objects evaluate their formulas") {
    ClosedForm d = closed_form_sn_vs_sn(GameRelation::Distinct);
    CHECK(d.domain_lo == 0);
    CHECK(d.domain_hi == 1);
    CHECK(d.breakpoints() == std::vector<Rat>{rat(1, 2)});
    for (int k = 0; k <= 6; ++k)
        CHECK(d(rat(k, 6)) == theorem1(rat(k, 6), GameRelation::Distinct));

    ClosedForm e = closed_form_sn_vs_sn(GameRelation::Equivalent);
    CHECK(e.breakpoints().empty());
    CHECK(e(rat(2, 7)) == rat(2, 7));

    ClosedForm k2 = closed_form_sn_vs_sk();
    CHECK(k2.domain_lo == rat(1, 2));
    CHECK(k2.breakpoints() == std::vector<Rat>{rat(3, 4)});
    CHECK(k2(rat(7, 8)) == rat(3, 4));

    ClosedForm m = closed_form_sn_vs_marginal();
    CHECK(m.breakpoints() == std::vector<Rat>{rat(1, 2)});
    CHECK(m(rat(1, 4)) == rat(7, 8));

    ClosedForm mm = closed_form_marginal_vs_marginal(GameRelation::TriviallyComplementary);
    CHECK(mm(rat(1, 3)) == rat(2, 3));
}

TEST_CASE("closed forms are concave piecewise-linear") {
    // Midpoint concavity across each breakpoint.
    ClosedForm d = closed_form_sn_vs_sn(GameRelation::Distinct);
    CHECK(d(rat(1, 2)) >= (d(rat(1, 4)) + d(rat(3, 4))) / 2);
    ClosedForm k2 = closed_form_sn_vs_sk();
    CHECK(k2(rat(3, 4)) >= (k2(rat(1, 2)) + k2(rat(1))) / 2);
}
