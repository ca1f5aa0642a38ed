#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "jpcert/bessel.hpp"

using namespace jpcert;

namespace {

BoundedReal br(double v, Prec p = 128) { return BoundedReal::from_double(v, p); }

}  // namespace

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_half_integer(8, 128).mid_double() == doctest::Approx(6.0));  // Gamma(4)
    // Gamma(1/2) = sqrt(pi)
    CHECK(gamma_half_integer(1, 128).mid_double() == doctest::Approx(std::sqrt(M_PI)));
    // Gamma(7/2) = 15 sqrt(pi) / 8
    CHECK(gamma_half_integer(7, 128).mid_double() ==
          doctest::Approx(15.0 * std::sqrt(M_PI) / 8.0));
}

TEST_CASE("half-integer closed forms") {
    // J_{1/2}(pi/2) = 2/pi (frozen from the closed form sqrt(2/(pi x)) sin x)
    BoundedReal x = BoundedReal::pi(192) * BoundedReal::from_rational(Rational(1, 2), 192);
    BoundedReal j = bessel_j({1}, x, 192);
    CHECK(j.mid_double() == doctest::Approx(0.63661977236758134308).epsilon(1e-14));
    // J_{3/2}(pi) = sqrt(2)/pi
    BoundedReal j32 = bessel_j({3}, BoundedReal::pi(192), 192);
    CHECK(j32.mid_double() == doctest::Approx(0.45015815807855303478).epsilon(1e-14));
    // J_{5/2}(3.7), frozen from sqrt(2/(pi x))((3/x^2-1) sin x - (3/x) cos x)
    BoundedReal j52 = bessel_j({5}, br(3.7, 192), 192);
    CHECK(j52.mid_double() == doctest::Approx(0.45685188411295336523).epsilon(1e-14));
    // closed forms across a range of x
    for (double xv = 0.25; xv <= 20.0; xv += 0.83) {
        BoundedReal got = bessel_j({1}, br(xv, 160), 160);
        double want = std::sqrt(2.0 / (M_PI * xv)) * std::sin(xv);
        CHECK(got.mid_double() == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("series leading behavior and domain errors") {
    CHECK(bessel_j({4}, BoundedReal(128), 128).mid_double() == 0.0);  // J_2(0) = 0
    CHECK(bessel_j({0}, BoundedReal(128), 128).mid_double() == doctest::Approx(1.0));
    CHECK_THROWS_AS(bessel_j({4}, br(-1.0), 128), NegativeArgument);
    CHECK_THROWS_AS(bessel_j({-2}, br(1.0), 128), OrderTooSmall);
}

TEST_CASE("radius is a true bound against 10x precision") {
    for (long tn : {0L, 1L, 3L, 4L, 9L, 25L})
        for (double xv : {0.1, 1.0, 4.5, 11.0, 30.0}) {
            BoundedReal lo = bessel_j({tn}, br(xv, 96), 96);
            BoundedReal hi = bessel_j({tn}, br(xv, 960), 960);
            BoundedReal diff = (lo - hi).abs_lower();
            CHECK_FALSE(diff.definitely_positive());
            CHECK(lo.rad_double() < 1e-20);
        }
}

TEST_CASE("bessel_bound values and domination") {
    CHECK(bessel_bound({4}, br(2.0), 128).mid_double() == doctest::Approx(0.5));
    CHECK(bessel_bound({4}, br(10.0), 128).mid_double() == doctest::Approx(1.0));
    CHECK(bessel_bound({5}, br(1.0), 128).mid_double() ==
          doctest::Approx(0.053192304053524357).epsilon(1e-14));
    CHECK_THROWS_AS(bessel_bound({3}, br(1.0), 128), OrderTooSmall);
    // |J_nu(x)| <= min{1, (x/2)^nu / Gamma(nu+1)} on a grid
    for (long tn = 4; tn <= 50; tn += 3)
        for (double xv = 0.5; xv <= 100.0; xv += 7.3) {
            BoundedReal j = bessel_j({tn}, br(xv), 128).abs();
            BoundedReal b = bessel_bound({tn}, br(xv), 128);
            CHECK(j.mid_double() <= b.mid_double() + b.rad_double() + j.rad_double() + 1e-25);
        }
}

TEST_CASE("cube-root bound") {
    BoundedReal a = bessel_amplitude_constant(128);
    CHECK(a.mid_double() == doctest::Approx(12.867944239193123811).epsilon(1e-14));
    CHECK(bessel_bound_cuberoot(br(1.0), 128).mid_double() ==
          doctest::Approx(12.867944239193123811).epsilon(1e-13));
    CHECK(bessel_bound_cuberoot(br(8.0), 128).mid_double() ==
          doctest::Approx(12.867944239193123811 / 2).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_bound_cuberoot(br(0.5), 128), ArgumentBelowOne);
    // |J_nu(x)| <= A x^(-1/3) across its stated window
    for (long tn = 4; tn <= 24; ++tn)
        for (double xv = 1.0; xv <= 50.0; xv += 2.7) {
            BoundedReal j = bessel_j({tn}, br(xv), 128).abs();
            BoundedReal b = bessel_bound_cuberoot(br(xv), 128);
            CHECK(j.mid_double() <= b.mid_double());
        }
}
