#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jpcert/ezmap.hpp"

using namespace jpcert;

TEST_CASE("relabeling") {
    CHECK(ez_relabel(1, 1) == 3);
    CHECK(ez_relabel(1, 0) == 4);
    CHECK(ez_relabel(1, -1) == 3);
    CHECK_THROWS_AS(ez_relabel(1, 2), NonpositiveDiscriminant);
}

TEST_CASE("kohnen_gd structure") {
    TruncationPlan plan{25, 128};
    // delta part: g_D(D) carries 2/3 before the series
    GdValue diag = kohnen_gd(14, 3, 3, TruncationPlan{0, 128});
    CHECK(diag.value.real().mid_double() == doctest::Approx(2.0 / 3.0));
    CHECK(diag.tail.definitely_positive());

    GdValue v33 = kohnen_gd(14, 3, 3, plan);
    CHECK(v33.value.real().mid_double() - v33.value.real().rad_double() -
              v33.tail.mid_double() > 0.0);
    CHECK(std::abs(v33.value.imag().mid_double()) < 1e-20);

    GdValue v34 = kohnen_gd(14, 3, 4, plan);  // delta part 0, series only
    CHECK(std::abs(v34.value.imag().mid_double()) < 1e-20);

    CHECK_THROWS_AS(kohnen_gd(13, 3, 3, plan), OddWeight);
    CHECK_THROWS_AS(kohnen_gd(4, 3, 3, plan), WeightTooSmall);
    CHECK_THROWS_AS(kohnen_gd(14, 5, 3, plan), BadResidueClass);
}

TEST_CASE("kohnen_gd tail is a true majorant") {
    for (auto [D, t] : {std::pair<long, long>{3, 3}, {3, 4}, {4, 7}}) {
        GdValue coarse = kohnen_gd(14, D, t, TruncationPlan{8, 128});
        GdValue fine = kohnen_gd(14, D, t, TruncationPlan{16, 128});
        double moved = (fine.value - coarse.value).abs_ball().mid_double();
        CHECK(moved <= coarse.tail.mid_double());
    }
}

TEST_CASE("j2h proportionality at k = 14") {
    TruncationPlan plan{30, 128};
    std::vector<std::pair<Int, Int>> targets{{1, 1}, {2, 1}, {1, 0}, {2, 0}, {3, 1}, {2, 2}};
    J2HReport rep = verify_j2h(14, 1, 1, targets, plan);
    REQUIRE(rep.kappa_defined);
    // delta-level algebra forces kappa = 3 under this normalization
    CHECK(rep.kappa.real().mid_double() == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(std::abs(rep.kappa.imag().mid_double()) < 1e-8);
    CHECK(rep.max_rel_spread < 1e-6);
    for (const auto& e : rep.entries) REQUIRE(e.ratio_defined);
}

TEST_CASE("j2h ratio stable under escalation") {
    std::vector<std::pair<Int, Int>> targets{{1, 1}, {2, 1}, {2, 0}};
    J2HReport a = verify_j2h(14, 1, 1, targets, TruncationPlan{20, 128});
    J2HReport b = verify_j2h(14, 1, 1, targets, TruncationPlan{40, 192});
    CHECK(std::abs(a.kappa.real().mid_double() - b.kappa.real().mid_double()) < 1e-8);
    CHECK(b.max_rel_spread <= a.max_rel_spread + 1e-12);
}

TEST_CASE("coefficients do not depend on r beyond D") {
    // c_{n,r}(n',r') for targets with equal D' agree (r' of matching parity)
    TruncationPlan plan{30, 128};
    auto m1 = HalfIntegralIndexMatrix::from_scalar_index(1);
    JacobiIndex from{1, {1}};
    CoefficientValue a = coefficient(14, m1, from, {1, {0}}, plan);   // D' = 4
    CoefficientValue b = coefficient(14, m1, from, {2, {2}}, plan);   // D' = 4
    double budget = a.tail_bound.mid_double() + b.tail_bound.mid_double() + 1e-24;
    CHECK((a.value - b.value).abs_ball().mid_double() <= budget);
}
