// Exponential sum families: the one-dimensional Kloosterman sum S(r,m;c),
// the degree-g Jacobi sums K_{m,c} and H_{m,c}, the half-integral Kohnen sum
// H_c(u,v) and its auxiliary split variants, plus verifiers for every
// identity relating them.
//
// The direct-enumeration evaluators are the oracles of record: x runs over
// {0,..,c-1}^g and y over units mod c exactly as the sums are written.  An
// accelerated g = 1 path collapses the x-sum to a quadratic Gauss sum; it is
// checked against the oracle by tests and used only by the series engines.
#pragma once

#include <optional>

#include "jpcert/bounded.hpp"
#include "jpcert/cyclotomic.hpp"
#include "jpcert/gauss.hpp"
#include "jpcert/index.hpp"

namespace jpcert {

struct KloostermanParams1D {
    Int r;
    Int m;
    Int c;  // >= 1
};

// S(r,m;c) = sum_{h mod c, (h,c)=1} e_c(r h + m h') with h h' == 1 (mod c)
BoundedComplex kloosterman_1d(const KloostermanParams1D& p, Prec prec);
CycVec kloosterman_1d_exact(const KloostermanParams1D& p);

struct JacobiSumParams {
    HalfIntegralIndexMatrix m;
    Int c;  // >= 1
    Int n;
    std::vector<Int> r;
    Int n_prime;
    std::vector<Int> r_prime;
};

// K_{m,c}(n,r,n',r') = sum_{x(c), y(c)*} e_c((m[x]+rx+n) ybar + n'y + r'x)
BoundedComplex kloosterman_g(const JacobiSumParams& p, Prec prec);

// H_{m,c} = c^{-g/2-1} K-sum * e_{2c}(r' m^{-1} r^t)
BoundedComplex h_jacobi(const JacobiSumParams& p, Prec prec, bool accelerated = false);

// H(r') + (-1)^k H(-r')
BoundedComplex h_plusminus(const JacobiSumParams& p, long k, Prec prec,
                           bool accelerated = false);

// Which reading of the symbol (-4/delta)^(w+1/2) is in force:
// kronecker(-4,delta)^w * eps_delta (direct) or * eps_delta^{-1} (inverse).
enum class HalfIntegralConvention { EpsilonDirect, EpsilonInverse };
inline constexpr HalfIntegralConvention kDefaultConvention =
    HalfIntegralConvention::EpsilonDirect;

struct HalfIntegralSumParams {
    long w;  // weight parameter; applications use w = k-1 with k even
    Int c;   // >= 1
    Int u;
    Int v;
};

// Kohnen's H_c(u,v) = (1-(-1)^w i)(1+(4/c)) (1/4c)
//                     sum_{delta(4c)*} (4c/delta)(-4/delta)^{w+1/2} e_{4c}(u delta + v delta^{-1})
BoundedComplex h_kohnen(const HalfIntegralSumParams& p, Prec prec,
                        HalfIntegralConvention conv = kDefaultConvention);
ExactValue h_kohnen_exact(const HalfIntegralSumParams& p,
                          HalfIntegralConvention conv = kDefaultConvention);

enum class AuxKind { DoubleH, ScriptHPrime, ScriptH };

// DoubleH      : HH_{alpha c}(u,v), even c, delta in [1, alpha c) coprime to 4c
// ScriptHPrime : H'_c(u,v), odd c, delta over units mod c
// ScriptH      : H_{4c}(u,v) without the (1-(-1)^w i) factor
BoundedComplex h_auxiliary(AuxKind kind, const HalfIntegralSumParams& p, int alpha,
                           Prec prec, HalfIntegralConvention conv = kDefaultConvention);
ExactValue h_auxiliary_exact(AuxKind kind, const HalfIntegralSumParams& p, int alpha,
                             HalfIntegralConvention conv = kDefaultConvention);

// S(r p^rho, m p^mu; c) = S(r, m p^(rho+mu); c) + p S(r p^(rho-1), m p^(mu-1); c/p)
// requires p | c, p !| r, p !| m.  Residual |LHS - RHS|.
BoundedReal verify_identity_1d(const Int& p, long rho, long mu, const Int& r, const Int& m,
                               const Int& c, Prec prec);
bool verify_identity_1d_exact(const Int& p, long rho, long mu, const Int& r, const Int& m,
                              const Int& c);

// K_{m p^mu, c}(p^mu n, p^mu r, p^rho n', r')
//   = K_{m p^(rho+mu), c}(p^(rho+mu) n, p^(rho+mu) r, n', r')
//   + p^2 K_{m p^(mu-1), c/p}(p^(mu-1) n, p^(mu-1) r, p^(rho-1) n', r'/p)
// requires p odd, p | (c, m, r, r'), p !| n, p !| n'.
BoundedReal verify_identity_g(const Int& p, long mu, long rho,
                              const HalfIntegralIndexMatrix& m, const Int& c, const Int& n,
                              const std::vector<Int>& r, const Int& n_prime,
                              const std::vector<Int>& r_prime, Prec prec);

// H_{1,c}(n,r,n',+-r') against H_c(D',D), g = 1, index 1, k even.
struct KloorelnsReport {
    BoundedComplex jacobi_plus;   // H_{1,c}(n,r,n',r')
    BoundedComplex jacobi_minus;  // H_{1,c}(n,r,n',-r')
    BoundedComplex kohnen;        // H_c(D',D) with w = k-1
    bool both_vanish;             // all three below their radii
    bool ratio_defined;
    BoundedComplex ratio;         // jacobi_plus / kohnen when defined
};
KloorelnsReport verify_kloorelns(const Int& c, const Int& n, const Int& r, const Int& n_prime,
                                 const Int& r_prime, long k, Prec prec,
                                 HalfIntegralConvention conv = kDefaultConvention);

// margin = 2^omega(c) c^(g/2-1) (D,c) - |H_{m,c}(n,r,n,+-r)|  (diagonal only)
BoundedReal bound_check_h(const JacobiSumParams& p, Prec prec);

// Empirical calibration of the character convention: sweeps the Kloosterman
// equality over small c and picks the reading with a constant ratio.
HalfIntegralConvention calibrate_half_integral_convention(long k, Prec prec);

}  // namespace jpcert
