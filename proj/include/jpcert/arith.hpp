// Exact integer and number-theoretic primitives used by every exponential
// sum: modular inverses, the Kronecker symbol in its full extension, the
// epsilon factor attached to odd moduli, and divisor statistics.
//
// Everything here is arbitrary precision (boost cpp_int); there is no modulus
// cap and no silent overflow.
#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jpcert/errors.hpp"

namespace jpcert {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Least non-negative residue of a mod c (c > 0).
Int mod_reduce(const Int& a, const Int& c);

// A unit residue b mod c, i.e. gcd(b, c) = 1 and 0 <= b < c.
struct UnitResidue {
    Int value;
    Int modulus;
};

// Inverse of a mod c: the unique b in [0, c) with a*b == 1 (mod c).
// Throws NotCoprime when gcd(a, c) > 1.
UnitResidue mod_inverse(const Int& a, const Int& c);

// Kronecker symbol (a|b), the full extension of the Jacobi symbol:
// (a|2) = 0 for even a and +-1 by a mod 8, (a|-1) by the sign of a,
// (a|0) = [a == +-1].  Completely multiplicative in both arguments.
int kronecker_symbol(const Int& a, const Int& b);

// epsilon_delta = 1 for delta == 1 (mod 4), i for delta == 3 (mod 4).
// Returned as the exponent of i, so 0 or 1; epsilon^2 = kronecker(-4, delta).
// Throws EvenInput.
struct EpsilonFactor {
    int i_power;  // 0 or 1
    bool is_one() const { return i_power == 0; }
};
EpsilonFactor epsilon_factor(const Int& delta);

struct DivisorStats {
    int omega;                 // number of distinct prime factors
    long sigma0;               // number of divisors
    std::vector<Int> divisors; // sorted ascending
};

// Factor-derived statistics of v >= 1 by trial division.
DivisorStats divisor_stats(const Int& v);

// Euler phi of c >= 1 by trial division.
Int euler_phi(const Int& c);

}  // namespace jpcert
