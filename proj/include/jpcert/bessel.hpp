// Rigorous J-Bessel evaluation for the integer and half-integer orders that
// appear in the coefficient formula, via the ascending series with a
// certified remainder (twice the first omitted term once the term ratio
// drops below 1/2), plus the two bounds used by the estimates.
#pragma once

#include "jpcert/bounded.hpp"

namespace jpcert {

struct BesselOrder {
    long twice_nu;  // nu = twice_nu / 2 in (1/2) Z, >= 0
};

// Gamma(twice_a / 2) for twice_a >= 1, by exact factorial formulas:
// Gamma(n) = (n-1)!, Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!).
BoundedReal gamma_half_integer(long twice_a, Prec prec);

// J_nu(x) for nu >= 0, x >= 0 (up to radius).  Throws NegativeArgument for
// certainly negative x.  Working precision is raised internally to absorb
// the cancellation of the alternating series.
BoundedReal bessel_j(BesselOrder nu, const BoundedReal& x, Prec prec);

// min{ 1, (x/2)^nu / Gamma(nu+1) } for nu >= 2, x > 0.
BoundedReal bessel_bound(BesselOrder nu, const BoundedReal& x, Prec prec);

// A = (1/pi)(2/6^(2/3) + 54/2^(5/6) + 16/2^(3/4))
BoundedReal bessel_amplitude_constant(Prec prec);

// A x^(-1/3) for x >= 1.
BoundedReal bessel_bound_cuberoot(const BoundedReal& x, Prec prec);

}  // namespace jpcert
