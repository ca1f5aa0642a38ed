// Quadratic Gauss sums G(a,b,c) = sum_{n mod c} e_c(a n^2 + b n):
// direct summation oracle, the closed-form evaluation table, and exact-mode
// cyclotomic versions of both.  The closed form covers the tabulated cases
// (gcd(a,c) = 1) and falls back to direct summation elsewhere.
#pragma once

#include "jpcert/bounded.hpp"
#include "jpcert/cyclotomic.hpp"

namespace jpcert {

struct GaussSumParams {
    Int a;
    Int b;
    Int c;  // >= 1
};

// Direct summation.  An optional precomputed e(t/c) table avoids re-deriving
// the roots when many sums share a modulus.
BoundedComplex gauss_sum_direct(const GaussSumParams& p, Prec prec,
                                const std::vector<BoundedComplex>* table = nullptr);

struct GaussClosed {
    BoundedComplex value;
    bool used_fallback;  // input outside the table; value from direct summation
};
GaussClosed gauss_sum_closed(const GaussSumParams& p, Prec prec,
                             const std::vector<BoundedComplex>* table = nullptr);

// |G(a,b,c1 c2) - G(c2 a, b, c1) G(c1 a, b, c2)|; throws NotCoprimeModuli.
BoundedReal verify_gauss_multiplicativity(const Int& a, const Int& b, const Int& c1,
                                          const Int& c2, Prec prec);

// Exact mode: values in Z[zeta_c].
CycVec gauss_direct_exact(const GaussSumParams& p);

struct GaussClosedExact {
    CycVec vec;
    bool used_fallback;
};
GaussClosedExact gauss_closed_exact(const GaussSumParams& p);

// eps_c sqrt(c) for odd c >= 1 as an element of Z[zeta_c], built from the
// quadratic-character sum (independent of the n^2 histogram).
CycVec epsilon_sqrt_exact(const Int& c_odd);

// General quadratic Gauss sum with possibly non-coprime leading coefficient,
// reduced by gcd blocks down to the tabulated cases (used by the accelerated
// g = 1 Kloosterman path).
BoundedComplex quad_gauss_any(const Int& a, const Int& b, const Int& c, Prec prec);

}  // namespace jpcert
