#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "jpcert/gauss.hpp"

using namespace jpcert;

namespace {

// independent double-precision direct sum
std::complex<double> direct_oracle(long a, long b, long c) {
    std::complex<double> s = 0;
    const double tau = 6.283185307179586476925287;
    for (long n = 0; n < c; ++n) {
        long e = ((a * n % c) * n + b * n) % c;
        s += std::exp(std::complex<double>(0, tau * e / c));
    }
    return s;
}

double dist(const BoundedComplex& z, std::complex<double> w) {
    return std::abs(std::complex<double>(z.real().mid_double(), z.imag().mid_double()) - w);
}

}  // namespace

TEST_CASE("direct sum fixed values") {
    // (1,0,3) = 1 + 2 e(1/3) = i sqrt(3)
    BoundedComplex g3 = gauss_sum_direct({1, 0, 3}, 128);
    CHECK(std::abs(g3.real().mid_double()) < 1e-30);
    CHECK(g3.imag().mid_double() == doctest::Approx(std::sqrt(3.0)));
    // (1,0,4) = 2 + 2i
    BoundedComplex g4 = gauss_sum_direct({1, 0, 4}, 128);
    CHECK(dist(g4, {2, 2}) < 1e-30);
    // c = 1: single term e(0)
    for (long a : {0L, 5L, -7L})
        CHECK(dist(gauss_sum_direct({a, 3, 1}, 128), {1, 0}) < 1e-30);
}

TEST_CASE("closed form fixed values") {
    // (1,1,3) = 3/2 - i sqrt(3)/2 both ways
    auto c3 = gauss_sum_closed({1, 1, 3}, 128);
    CHECK_FALSE(c3.used_fallback);
    CHECK(dist(c3.value, {1.5, -std::sqrt(3.0) / 2})  < 1e-30);
    CHECK(dist(gauss_sum_direct({1, 1, 3}, 128), {1.5, -std::sqrt(3.0) / 2}) < 1e-30);
    // table rows with even modulus
    auto z = gauss_sum_closed({1, 0, 2}, 128);
    CHECK_FALSE(z.used_fallback);
    CHECK(z.value.abs_upper().mid_double() < 1e-30);
    auto w = gauss_sum_closed({1, 1, 2}, 128);
    CHECK_FALSE(w.used_fallback);
    CHECK(dist(w.value, {2, 0}) < 1e-30);
    auto f = gauss_sum_closed({1, 0, 4}, 128);
    CHECK_FALSE(f.used_fallback);
    CHECK(dist(f.value, {2, 2}) < 1e-30);
}

TEST_CASE("closed equals direct over a grid, magnitude sqrt(c) for odd c") {
    for (long c = 1; c <= 40; ++c) {
        auto table = unit_root_table(c, 128);
        for (long a = 0; a < c; ++a) {
            if (std::gcd(a, c) != 1) continue;
            for (long b = 0; b < c; ++b) {
                BoundedComplex d = gauss_sum_direct({a, b, c}, 128, &table);
                auto cl = gauss_sum_closed({a, b, c}, 128, &table);
                BoundedReal res = (d - cl.value).abs_ball();
                CHECK(res.mid_double() < 1e-30);
                if (c % 2 == 1) {
                    BoundedReal mag = d.abs_ball();
                    CHECK(mag.mid_double() == doctest::Approx(std::sqrt((double)c)).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("fallback engages off the table and stays correct") {
    auto r = gauss_sum_closed({2, 2, 6}, 128);  // gcd(a,c) = 2
    CHECK(r.used_fallback);
    CHECK(dist(r.value, direct_oracle(2, 2, 6)) < 1e-12);
    auto s = gauss_sum_closed({1, 2, 4}, 128);  // 4 | c, b even nonzero
    CHECK(s.used_fallback);
    CHECK(dist(s.value, direct_oracle(1, 2, 4)) < 1e-12);
}

TEST_CASE("multiplicativity") {
    CHECK(verify_gauss_multiplicativity(1, 0, 3, 4, 128).mid_double() < 1e-20);
    CHECK(verify_gauss_multiplicativity(1, 1, 3, 5, 128).mid_double() < 1e-20);
    CHECK(verify_gauss_multiplicativity(2, 0, 1, 7, 128).mid_double() < 1e-20);
    CHECK_THROWS_AS(verify_gauss_multiplicativity(1, 0, 6, 4, 128), NotCoprimeModuli);
    for (long c1 : {3L, 4L, 5L, 8L, 9L})
        for (long c2 : {7L, 11L})
            for (long a : {1L, 2L, 5L})
                for (long b : {0L, 1L, 3L})
                    CHECK(verify_gauss_multiplicativity(a, b, c1, c2, 128).mid_double() < 1e-20);
}

TEST_CASE("exact mode: closed equals direct identically") {
    for (long c = 1; c <= 30; ++c) {
        for (long a = 0; a < std::max(1L, c); ++a) {
            if (std::gcd(a, c) != 1) continue;
            for (long b = 0; b < std::max(1L, c); ++b) {
                CycVec d = gauss_direct_exact({a, b, c});
                GaussClosedExact cl = gauss_closed_exact({a, b, c});
                CHECK(cyc_is_zero(cyc_sub(d, cl.vec)));
            }
            if (c == 1) break;
        }
    }
}

TEST_CASE("epsilon_sqrt_exact evaluates to eps_c sqrt(c)") {
    for (long c = 1; c <= 35; c += 2) {
        CycVec v = epsilon_sqrt_exact(c);
        std::complex<double> got = 0;
        const double tau = 6.283185307179586476925287;
        for (long j = 0; j < v.modulus; ++j)
            got += static_cast<double>(v.coeff[(size_t)j]) *
                   std::exp(std::complex<double>(0, tau * j / v.modulus));
        std::complex<double> want =
            (c % 4 == 1) ? std::complex<double>(std::sqrt((double)c), 0)
                         : std::complex<double>(0, std::sqrt((double)c));
        CHECK(std::abs(got - want) < 1e-9);
    }
}

TEST_CASE("quad_gauss_any handles degenerate leading coefficients") {
    for (long c : {6L, 8L, 12L, 16L, 18L, 24L, 40L, 45L})
        for (long a = 0; a < c; ++a)
            for (long b : {0L, 1L, 2L, 3L, c / 2}) {
                BoundedComplex got = quad_gauss_any(a, b, c, 128);
                CHECK(dist(got, direct_oracle(a, b, c)) < 1e-9);
            }
}
