#include "jpcert/bessel.hpp"

#include <algorithm>
#include <cmath>

#include "jpcert/errors.hpp"

namespace jpcert {

BoundedReal gamma_half_integer(long twice_a, Prec prec) {
    if (twice_a < 1) throw DomainError("gamma_half_integer: argument must be >= 1/2");
    if (twice_a % 2 == 0) {
        return BoundedReal::factorial(static_cast<unsigned long>(twice_a / 2 - 1), prec);
    }
    // Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!)
    long n = (twice_a - 1) / 2;
    Int num = 1;
    for (long i = 2; i <= 2 * n; ++i) num *= i;
    Int den = 1;
    for (long i = 2; i <= n; ++i) den *= i;
    den <<= 2 * n;
    return BoundedReal::from_rational(Rational(num, den), prec) *
           BoundedReal::pi(prec).sqrt();
}

BoundedReal bessel_j(BesselOrder nu, const BoundedReal& x, Prec prec) {
    if (nu.twice_nu < 0) throw OrderTooSmall("bessel_j: order must be >= 0");
    if (x.definitely_negative()) throw NegativeArgument("bessel_j: x must be >= 0");
    const double x_ub = x.abs_upper().mid_double();
    if (!(x_ub < 1.0e5)) throw DomainError("bessel_j: argument too large for the ascending series");

    // extra bits absorb the alternating-series cancellation (max term ~ e^x)
    const Prec work = prec + 64 + static_cast<Prec>(1.4427 * x_ub);
    const BoundedReal one = BoundedReal::from_long(1, work);
    const BoundedReal half_x = x * BoundedReal::from_rational(Rational(1, 2), work);
    const BoundedReal pref = half_x.pow_half(nu.twice_nu);
    const BoundedReal q = -(half_x * half_x);

    BoundedReal term = one / gamma_half_integer(nu.twice_nu + 2, work);
    BoundedReal sum(work);
    const double x2_4 = x_ub * x_ub / 4.0;
    const double pref_ub = pref.abs_upper().mid_double();
    if (!std::isfinite(pref_ub))
        throw DomainError("bessel_j: prefactor overflows the stopping heuristic");
    const double target = std::ldexp(1.0, -static_cast<int>(std::min<Prec>(prec + 24, 16000))) /
                          std::max(pref_ub, 1.0);
    for (long j = 0;; ++j) {
        sum.add_assign(term);
        // t_{j+1} = t_j * q / ((j+1)(nu+j+1))
        term = term * q *
               BoundedReal::from_rational(
                   Rational(2, Int(j + 1) * (nu.twice_nu + 2 * j + 2)), work);
        if (j + 1 >= x2_4) {
            // tail ratio at and beyond the next term
            double ratio = x2_4 / (static_cast<double>(j + 2) *
                                   (nu.twice_nu / 2.0 + j + 2));
            if (ratio <= 0.5 && term.abs_upper().mid_double() < target) break;
        }
        if (j > 2000000) throw DomainError("bessel_j: series failed to terminate");
    }
    BoundedReal result = pref * sum;
    // remainder <= 2 |first omitted term| * prefactor
    result.widen_by(BoundedReal::from_long(2, work) * term.abs_upper() * pref.abs_upper());
    return result;
}

BoundedReal bessel_bound(BesselOrder nu, const BoundedReal& x, Prec prec) {
    if (nu.twice_nu < 4) throw OrderTooSmall("bessel_bound: requires nu >= 2");
    if (!x.definitely_positive()) throw DomainError("bessel_bound: requires x > 0");
    BoundedReal half_x = x * BoundedReal::from_rational(Rational(1, 2), prec);
    BoundedReal power = half_x.pow_half(nu.twice_nu) / gamma_half_integer(nu.twice_nu + 2, prec);
    return min_ball(BoundedReal::from_long(1, prec), power);
}

BoundedReal bessel_amplitude_constant(Prec prec) {
    auto r = [prec](long num, long den) { return BoundedReal::from_rational(Rational(num, den), prec); };
    BoundedReal t1 = BoundedReal::from_long(2, prec) /
                     BoundedReal::from_long(6, prec).pow(r(2, 3));
    BoundedReal t2 = BoundedReal::from_long(54, prec) /
                     BoundedReal::from_long(2, prec).pow(r(5, 6));
    BoundedReal t3 = BoundedReal::from_long(16, prec) /
                     BoundedReal::from_long(2, prec).pow_quarter(3);
    return (t1 + t2 + t3) / BoundedReal::pi(prec);
}

BoundedReal bessel_bound_cuberoot(const BoundedReal& x, Prec prec) {
    if (!BoundedReal::from_long(1, prec).certainly_leq(x))
        throw ArgumentBelowOne("bessel_bound_cuberoot: requires x >= 1");
    BoundedReal exponent = BoundedReal::from_rational(Rational(-1, 3), prec);
    return bessel_amplitude_constant(prec) * x.pow(exponent);
}

}  // namespace jpcert
