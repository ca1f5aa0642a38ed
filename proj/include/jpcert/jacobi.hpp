// The Fourier-coefficient engine for Jacobi Poincare series: delta terms,
// the Kloosterman-Bessel series over c with an explicit computable tail
// majorant, the Petersson constant, and the development operator that sends
// index-m Jacobi forms to elliptic q-expansions.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jpcert/bessel.hpp"
#include "jpcert/bounded.hpp"
#include "jpcert/index.hpp"
#include "jpcert/kloosterman.hpp"

namespace jpcert {

struct TruncationPlan {
    long c_max = 10;
    Prec prec = kDefaultPrec;

    // c_max = max(10, ceil(4 pi D / det(2m))): the Bessel argument falls
    // below 1 near c ~ 2 pi D / det(2m), after which terms collapse.
    static TruncationPlan defaults_for(const Int& D, const Int& det_two_m);
    TruncationPlan escalated() const { return {c_max * 2, prec + 64}; }
};

struct CoefficientValue {
    BoundedComplex value;
    long truncation_c_max = 0;
    BoundedReal tail_bound;
};

// lambda_{k,m,D} = 2^((g-1)(k-g/2-1)-g) Gamma(k-g/2-1) pi^(-k+g/2+1)
//                  (det m)^(k-(g+3)/2) D^(-k+g/2+1); requires k > g/2+1.
BoundedReal petersson_lambda(long k, const HalfIntegralIndexMatrix& m, const Int& D,
                             Prec prec);

// Majorant for | sum_{c>C} (H pair)(c) J_{k'}(2 pi sqrt(D D') / (det(2m) c)) |:
//   2 D (pi sqrt(D D')/det)^{k'} / Gamma(k'+1) * (C^(1-s)/(s-1) + C^(-s)),
// s = k-g-1; uses 2^omega(c) (D,c) <= c D and the (x/2)^nu power bound.
// Requires k > g+3 (so s > 2).
BoundedReal series_tail_bound(long k, long g, const Int& det_two_m, const Int& D,
                              const Int& D_prime, long C, Prec prec);

// Tail of the full coefficient: 2 pi det(2m)^(-1/2) (D'/D)^(k/2-g/4-1/2)
// times series_tail_bound.
BoundedReal tail_bound(long k, const HalfIntegralIndexMatrix& m, const Int& D,
                       const Int& D_prime, long C, Prec prec);

// c_{n,r}^{k,m}(n',r') = delta_m(n,r,n',r') + (-1)^k delta_m(n,r,n',-r')
//   + 2 pi i^k det(2m)^(-1/2) (D'/D)^(k/2-g/4-1/2)
//     sum_{c>=1} (H_{m,c}(n,r,n',r') + (-1)^k H_{m,c}(n,r,n',-r'))
//     J_{k-g/2-1}(2 pi sqrt(D D')/(det(2m) c)),
// truncated at plan.c_max with the tail bound attached.
CoefficientValue coefficient(long k, const HalfIntegralIndexMatrix& m, const JacobiIndex& from,
                             const JacobiIndex& to, const TruncationPlan& plan);

// S(n,r) = det(2m)^(-1/2) sum_c (H pair)(c) J_{k'}(2 pi D/(det(2m) c))
struct SeriesValue {
    BoundedComplex s;
    BoundedReal tail;
    long c_max = 0;
};
SeriesValue s_series(long k, const HalfIntegralIndexMatrix& m, const JacobiIndex& idx,
                     const TruncationPlan& plan);

// Development operator coefficients (g = 1, k even, unnormalized: the
// A_{k,nu} constant is dropped so everything stays rational):
// a(n) = sum_{r^2 < 4mn} ( sum_{0<=mu<=nu} (k+2nu-mu-2)!/(k+2nu-2)!
//        (-mn)^mu r^(2nu-2mu) / (mu! (2nu-2mu)!) ) c(n,r),  n = 1..n_max.
using CoefficientMap = std::map<std::pair<long, long>, Rational>;
std::vector<Rational> develop_d2nu(const CoefficientMap& coeffs, long k, long m, long nu,
                                   long n_max);

// A_{k,nu} = (2 pi i)^(-nu) (k+2nu-2)! (2nu)! / (k+nu-2)!
BoundedComplex develop_a_constant(long k, long nu, Prec prec);

// Normalized coefficients A_{k,nu} * a(n) of the weight k+2nu form.
std::vector<BoundedComplex> develop_d2nu_normalized(const CoefficientMap& coeffs, long k,
                                                    long m, long nu, long n_max, Prec prec);

}  // namespace jpcert
