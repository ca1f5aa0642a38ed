#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jpcert/index.hpp"

using namespace jpcert;

TEST_CASE("index matrix validation") {
    CHECK_NOTHROW(HalfIntegralIndexMatrix::from_two_m(1, {2}));
    CHECK_NOTHROW(HalfIntegralIndexMatrix::from_two_m(2, {2, 1, 1, 2}));
    CHECK_THROWS_AS(HalfIntegralIndexMatrix::from_two_m(1, {1}), BadIndexMatrix);   // odd diagonal
    CHECK_THROWS_AS(HalfIntegralIndexMatrix::from_two_m(1, {-2}), BadIndexMatrix);  // not positive
    CHECK_THROWS_AS(HalfIntegralIndexMatrix::from_two_m(2, {2, 1, 0, 2}), BadIndexMatrix);
    CHECK_THROWS_AS(HalfIntegralIndexMatrix::from_two_m(2, {2, 3, 3, 2}), BadIndexMatrix);
}

TEST_CASE("discriminant") {
    auto m1 = HalfIntegralIndexMatrix::from_scalar_index(1);
    CHECK(discriminant({1, {0}}, m1) == 4);  // 4nm - r^2
    CHECK(discriminant({1, {1}}, m1) == 3);
    auto m2 = HalfIntegralIndexMatrix::from_two_m(2, {2, 0, 0, 2});
    CHECK(discriminant({1, {0, 0}}, m2) == 8);  // det diag(2,2,2)
    // a non-diagonal 3x3 block determinant, checked against direct expansion
    auto m2b = HalfIntegralIndexMatrix::from_two_m(2, {2, 1, 1, 4});
    JacobiIndex idx{2, {1, -1}};
    // det [[4,1,-1],[1,2,1],[-1,1,4]] = 4*(8-1) - 1*(4+1) + (-1)*(1+2)
    CHECK(discriminant(idx, m2b) == 4 * 7 - 5 - 3);
}

TEST_CASE("delta_m congruence") {
    auto m1 = HalfIntegralIndexMatrix::from_scalar_index(1);
    CHECK(delta_m({1, {1}}, {1, {1}}, m1) == 1);
    CHECK(delta_m({1, {1}}, {1, {-1}}, m1) == 1);  // r - r' = 2 = 1 * 2m
    auto m2 = HalfIntegralIndexMatrix::from_scalar_index(2);
    CHECK(delta_m({1, {1}}, {1, {-1}}, m2) == 0);  // 2 not a multiple of 4
    CHECK(delta_m({1, {0}}, {1, {1}}, m1) == 0);   // different discriminant
}

TEST_CASE("two_r_congruent_zero") {
    auto m1 = HalfIntegralIndexMatrix::from_scalar_index(1);
    auto m2 = HalfIntegralIndexMatrix::from_scalar_index(2);
    CHECK(two_r_congruent_zero({Int(0)}, m1));
    CHECK(two_r_congruent_zero({Int(1)}, m1));   // 2 = 1 * 2m
    CHECK_FALSE(two_r_congruent_zero({Int(1)}, m2));
    auto m2g = HalfIntegralIndexMatrix::from_two_m(2, {2, 1, 1, 2});
    CHECK(two_r_congruent_zero({Int(0), Int(0)}, m2g));
}

TEST_CASE("matrix helpers") {
    auto m = HalfIntegralIndexMatrix::from_two_m(2, {4, 1, 1, 2});
    CHECK(m.det_two_m() == 7);
    // adj * A = det * I
    const auto& adj = m.adjugate_two_m();
    Int a00 = adj[0] * 4 + adj[1] * 1;
    Int a01 = adj[0] * 1 + adj[1] * 2;
    CHECK(a00 == 7);
    CHECK(a01 == 0);
    // m[x] integral
    CHECK(m.m_bracket({Int(1), Int(1)}) == (4 + 1 + 1 + 2) / 2);
    // r m^{-1} r^t = 2 r adj r^t / det
    Rational q = m.r_m_inverse_rt({Int(1), Int(0)}, {Int(1), Int(0)});
    CHECK(q == Rational(2 * 2, 7));
    auto ms = m.scaled(3);
    CHECK(ms.det_two_m() == 63);
}
