#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jpcert/jacobi.hpp"

using namespace jpcert;

namespace {

const auto m1 = HalfIntegralIndexMatrix::from_scalar_index(1);

double total_unc(const CoefficientValue& v) {
    return v.value.real().rad_double() + v.value.imag().rad_double() +
           v.tail_bound.mid_double() + v.tail_bound.rad_double();
}

}  // namespace

TEST_CASE("petersson lambda") {
    // g=1, k=4, m=1, D=4: (1/2) Gamma(5/2) (4 pi)^(-5/2)
    BoundedReal lam = petersson_lambda(4, m1, 4, 128);
    CHECK(lam.mid_double() == doctest::Approx(1.18735762080864576e-3).epsilon(1e-13));
    // positivity across a grid
    for (long k : {4L, 8L, 12L, 20L})
        for (long d : {3L, 4L, 7L, 100L})
            CHECK(petersson_lambda(k, m1, d, 128).definitely_positive());
    // lambda_{k,m,D} / lambda_{k,m,2D} = 2^(k - 3/2) for g = 1
    for (long k : {4L, 9L, 14L}) {
        BoundedReal ratio = petersson_lambda(k, m1, 3, 128) / petersson_lambda(k, m1, 6, 128);
        BoundedReal want = BoundedReal::from_long(2, 128).pow_half(2 * k - 3);
        CHECK((ratio - want).abs().mid_double() < 1e-25);
    }
    CHECK_THROWS_AS(petersson_lambda(1, m1, 4, 128), BadWeight);
}

TEST_CASE("tail bound shape") {
    // decreasing in C, tends to zero
    BoundedReal prev = tail_bound(14, m1, 3, 3, 1, 128);
    for (long c : {2L, 5L, 10L, 40L, 200L}) {
        BoundedReal cur = tail_bound(14, m1, 3, 3, c, 128);
        CHECK(cur.mid_double() <= prev.mid_double());
        CHECK(cur.definitely_positive());
        prev = cur;
    }
    CHECK(prev.mid_double() < 1e-20);
    CHECK_THROWS_AS(tail_bound(4, m1, 3, 3, 10, 128), WeightTooSmall);
    // C = 0 covers the whole series, dominating the C = 1 bound
    CHECK(tail_bound(14, m1, 3, 3, 1, 128).mid_double() <
          tail_bound(14, m1, 3, 3, 0, 128).mid_double());

    // the bound really majorizes the discarded terms: compare the c in
    // (C, 2C] block of the series against tail_bound at C
    const long C = 6;
    BoundedReal block(128);
    JacobiIndex idx{1, {1}};
    for (long c = C + 1; c <= 6 * C; ++c) {
        JacobiSumParams p{m1, c, 1, {1}, 1, {1}};
        BoundedComplex pair = h_plusminus(p, 14, 128);
        BoundedReal x = BoundedReal::pi(128) * BoundedReal::from_long(2, 128) *
                        BoundedReal::from_long(3, 128) /
                        (BoundedReal::from_long(2, 128) * BoundedReal::from_long(c, 128));
        block.add_assign(pair.abs_ball() * bessel_j({2 * 14 - 3}, x, 128));
    }
    BoundedReal pref = BoundedReal::pi(128) * BoundedReal::from_long(2, 128) *
                       BoundedReal::from_long(2, 128).pow_half(-1);
    CHECK((pref * block).mid_double() <= tail_bound(14, m1, 3, 3, C, 128).mid_double());
}

TEST_CASE("coefficient: odd weight diagonal vanishes") {
    TruncationPlan plan = TruncationPlan::defaults_for(4, 2);
    CoefficientValue v = coefficient(11, m1, {1, {0}}, {1, {0}}, plan);
    // delta part cancels and the H pairs cancel termwise: midpoint is 0 to
    // roundoff, and the total stays inside its own uncertainty
    CHECK(v.value.abs_ball().mid_double() < 1e-30);
    CHECK(v.value.abs_upper().mid_double() <=
          v.value.real().rad_double() + v.value.imag().rad_double() + 1e-30);
}

TEST_CASE("coefficient: k=14 diagonal positive, uncertainty excludes zero") {
    TruncationPlan plan = TruncationPlan::defaults_for(3, 2);
    CoefficientValue v = coefficient(14, m1, {1, {1}}, {1, {1}}, plan);
    // delta part is 2; the value is real and positive
    CHECK(std::abs(v.value.imag().mid_double()) < 1e-20);
    CHECK(v.value.real().mid_double() > 0.0);
    CHECK(v.value.real().mid_double() - total_unc(v) > 0.0);
    CHECK(v.truncation_c_max == plan.c_max);
}

TEST_CASE("coefficient: structural-zero target stays below uncertainty") {
    // from (1,0) to (1,1): D=4 vs D'=3, no delta part; series is genuinely
    // small but nonzero, so only check it is bounded sensibly
    TruncationPlan plan = TruncationPlan::defaults_for(4, 2);
    CoefficientValue v = coefficient(14, m1, {1, {0}}, {1, {1}}, plan);
    CHECK(v.value.abs_upper().mid_double() < 1.0);
}

TEST_CASE("hermitian symmetry of the Petersson pairing") {
    TruncationPlan plan{40, 160};
    for (long k : {12L, 14L, 16L, 20L}) {
        JacobiIndex a{1, {1}};
        JacobiIndex b{2, {1}};
        Int Da = discriminant(a, m1), Db = discriminant(b, m1);
        CoefficientValue ab = coefficient(k, m1, a, b, plan);
        CoefficientValue ba = coefficient(k, m1, b, a, plan);
        BoundedReal lam_a = petersson_lambda(k, m1, Da, 160);
        BoundedReal lam_b = petersson_lambda(k, m1, Db, 160);
        // <P_a, P_b> = lam(D_b) c_a(b) must conjugate-match <P_b, P_a>
        BoundedComplex lhs = ab.value.scaled(lam_b);
        BoundedComplex rhs = ba.value.conj().scaled(lam_a);
        double budget = lam_b.mid_double() * ab.tail_bound.mid_double() +
                        lam_a.mid_double() * ba.tail_bound.mid_double() + 1e-30;
        CHECK((lhs - rhs).abs_ball().mid_double() <= budget);
    }
}

TEST_CASE("petersson positivity of diagonal coefficients") {
    TruncationPlan plan{30, 128};
    for (long k : {12L, 14L, 16L, 20L})
        for (long m : {1L, 2L}) {
            auto im = HalfIntegralIndexMatrix::from_scalar_index(m);
            for (long n : {1L, 2L})
                for (long r : {0L, 1L}) {
                    if (4 * m * n - r * r <= 0) continue;
                    JacobiIndex idx{n, {r}};
                    CoefficientValue v = coefficient(k, im, idx, idx, plan);
                    CHECK(std::abs(v.value.imag().mid_double()) <
                          v.value.imag().rad_double() + 1e-28);
                    CHECK(v.value.real().mid_double() > -total_unc(v));
                }
        }
}

TEST_CASE("diagonal coefficient equals delta part plus 2 pi i^k S") {
    TruncationPlan plan{30, 128};
    JacobiIndex idx{1, {1}};
    CoefficientValue v = coefficient(14, m1, idx, idx, plan);
    SeriesValue s = s_series(14, m1, idx, plan);
    BoundedComplex recon = s.s.scaled(BoundedReal::pi(128) * BoundedReal::from_long(2, 128))
                               .times_i_power(14);
    recon.add_assign(BoundedComplex::from_real(BoundedReal::from_long(2, 128)));
    CHECK((v.value - recon).abs_ball().mid_double() < 1e-28);
}

TEST_CASE("s_series magnitudes at the certification examples") {
    JacobiIndex i14{1, {1}};
    TruncationPlan p14 = TruncationPlan::defaults_for(3, 2);
    SeriesValue s14 = s_series(14, m1, i14, p14);
    CHECK(s14.s.abs_ball().mid_double() + s14.tail.mid_double() < 1.0 / (2 * M_PI));

    JacobiIndex i69{1, {0}};
    TruncationPlan p69 = TruncationPlan::defaults_for(4, 2);
    SeriesValue s69 = s_series(69, m1, i69, p69);
    CHECK(s69.s.abs_ball().mid_double() + s69.tail.mid_double() < 1.0 / (2 * M_PI));

    // empty partial sum: value 0, tail only
    SeriesValue s0 = s_series(14, m1, i14, TruncationPlan{0, 128});
    CHECK(s0.s.abs_upper().mid_double() == 0.0);
    CHECK(s0.tail.definitely_positive());
}

TEST_CASE("uncertainty decreases as c_max grows") {
    JacobiIndex idx{1, {1}};
    double prev = 1e300;
    for (long cm : {5L, 10L, 20L, 40L}) {
        CoefficientValue v = coefficient(14, m1, idx, idx, TruncationPlan{cm, 128});
        double unc = total_unc(v);
        CHECK(unc < prev);
        prev = unc;
    }
}

TEST_CASE("development operator") {
    // nu = 0: plain r-sum; frozen example
    CoefficientMap coeffs;
    coeffs[{1, 0}] = 10;
    coeffs[{1, 1}] = 1;
    coeffs[{1, -1}] = 1;
    auto a = develop_d2nu(coeffs, 12, 1, 0, 1);
    REQUIRE(a.size() == 1);
    CHECK(a[0] == Rational(12));

    // nu = 1, m = 1, n = 1, k = 10: weights r^2/2 - mn/k frozen from the
    // factorial formula: w(+-1) = 1/2 - 1/10 = 2/5, w(0) = -1/10
    CoefficientMap unit0, unit1;
    unit0[{1, 0}] = 1;
    unit0[{1, 1}] = 0;
    unit0[{1, -1}] = 0;
    unit1[{1, 0}] = 0;
    unit1[{1, 1}] = 1;
    unit1[{1, -1}] = 0;
    CHECK(develop_d2nu(unit0, 10, 1, 1, 1)[0] == Rational(-1, 10));
    CHECK(develop_d2nu(unit1, 10, 1, 1, 1)[0] == Rational(2, 5));

    // linearity with random rational inputs
    CoefficientMap f, g, combo;
    for (long n = 1; n <= 3; ++n)
        for (long r = -3; r <= 3; ++r) {
            if (r * r >= 4 * n) continue;
            f[{n, r}] = Rational(n + r, 3);
            g[{n, r}] = Rational(2 * n - r, 5);
            combo[{n, r}] = 7 * f[{n, r}] + 11 * g[{n, r}];
        }
    auto fa = develop_d2nu(f, 12, 1, 1, 3);
    auto ga = develop_d2nu(g, 12, 1, 1, 3);
    auto ca = develop_d2nu(combo, 12, 1, 1, 3);
    for (size_t i = 0; i < ca.size(); ++i) CHECK(ca[i] == 7 * fa[i] + 11 * ga[i]);

    CHECK_THROWS_AS(develop_d2nu(f, 11, 1, 0, 1), OddWeight);
    CoefficientMap sparse;
    sparse[{1, 0}] = 1;
    CHECK_THROWS_AS(develop_d2nu(sparse, 12, 1, 0, 1), MissingCoefficient);

    // A_{k,0} = 1
    BoundedComplex a0 = develop_a_constant(12, 0, 128);
    CHECK(a0.real().mid_double() == doctest::Approx(1.0));
    CHECK(std::abs(a0.imag().mid_double()) < 1e-30);
    // A_{k,1} = (2 pi i)^{-1} k!... check magnitude formula (k)!(2)!/(k-1)! = 2k
    BoundedComplex a1 = develop_a_constant(12, 1, 128);
    CHECK(a1.imag().mid_double() == doctest::Approx(-2.0 * 12 / (2 * M_PI)));

    // normalized output is the rational output scaled by A_{k,nu}
    auto norm = develop_d2nu_normalized(f, 12, 1, 1, 3, 128);
    REQUIRE(norm.size() == fa.size());
    for (size_t i = 0; i < norm.size(); ++i) {
        BoundedComplex want = a1.scaled(BoundedReal::from_rational(fa[i], 128));
        CHECK((norm[i] - want).abs_ball().mid_double() < 1e-30);
    }
}

TEST_CASE("plan defaults") {
    TruncationPlan p = TruncationPlan::defaults_for(3, 2);
    CHECK(p.c_max >= 10);
    CHECK(p.prec == 128);
    TruncationPlan q = TruncationPlan::defaults_for(100, 2);
    CHECK(q.c_max >= 4 * 3.14159 * 50);
    TruncationPlan e = q.escalated();
    CHECK(e.c_max == 2 * q.c_max);
    CHECK(e.prec == q.prec + 64);
}
