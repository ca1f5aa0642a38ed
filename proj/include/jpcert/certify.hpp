// Non-vanishing certificates and the theorem-region predicates.  A
// certificate is sound: CertifiedNonzero is only returned when the partial
// sum, its radius and the series tail together stay strictly below 1/(2 pi),
// so the delta part of the diagonal coefficient dominates.
#pragma once

#include <optional>
#include <vector>

#include "jpcert/jacobi.hpp"

namespace jpcert {

enum class CertStatus { CertifiedNonzero, VanishesExactly, Inconclusive };

struct Certificate {
    CertStatus status;
    BoundedReal s_abs;             // |S(n,r)| as a ball
    BoundedReal tail;              // series tail bound at the final plan
    BoundedReal threshold_margin;  // 1/(2 pi) - (|S| + tail)
    TruncationPlan plan_used;
};

// k odd and 2r == 0 (mod Z^g 2m)
bool trivial_vanishing(long k, const HalfIntegralIndexMatrix& m, const std::vector<Int>& r);

// Evaluates S(n,r) under the plan (default: TruncationPlan::defaults_for),
// escalating c_max x2 and precision +64 up to 3 times before giving up.
Certificate certify_nonvanishing(long k, const HalfIntegralIndexMatrix& m,
                                 const JacobiIndex& idx,
                                 std::optional<TruncationPlan> plan = {});

struct RegionReport {
    bool in_region = false;
    bool applicable = true;  // thm 1.2 hypothesis D > m/pi
    BoundedReal lhs;         // binding inequality, outward rounded
    BoundedReal rhs;
    long k0_used = 0;
    double B_used = 0;
    double B1_used = 0;
};

// k0 = max(g+4, [g/2]+69), the only explicit k0 in scope
long default_k0(long g);

// D <= (k'/(pi e)) det(2m) together with k >= k0
RegionReport region_linear_weight(long k, long g, const Int& det_two_m, const Int& D,
                                 std::optional<long> k0 = {});

// D < det(2m)/pi with the weight floor (k > 5 for g = 1, k > g+3 otherwise)
RegionReport region_small_discriminant(long g, const Int& det_two_m, const Int& D, long k);

// g = 1: the part-2 window is non-void for n < 1/6 + (2m-3)^2/(144m)
bool region_nonvoid(const Int& m, const Int& n);
// smallest r > 0 with 2m(2n - 1/3) < r^2 < 4mn, when one exists
std::optional<Int> nonvoid_witness(const Int& m, const Int& n);

// M(x) = exp(B1 log x / log log 2x), x >= 2, B1 > log 2
BoundedReal m_factor(const BoundedReal& x, double B1 = 0.7);

// alpha(g) for the damped power window: 2/(3(g+2)) for 1<=g<=4, 2/(3g) for
// g >= 5; the narrower variant 2/(3g+2) sits behind the flag.
Rational power_window_alpha(long g, bool proof_variant = false);

// k' <= pi D / det(2m) <= k'^(1+alpha(g)) exp(-B log k' / log log k'), B > 3 log 2
RegionReport region_power_window(long k, long g, const Int& det_two_m, const Int& D, double B = 2.1,
                          std::optional<long> k0 = {}, bool proof_variant = false);

// g = 1, weight independent: M(pi D/m) sigma_0(D) D < m^(8/7)/lambda for D > m/pi
RegionReport region_weight_free(const Int& m, const Int& D, double B1 = 0.7);

// D <= k^2 exp(-B log k / log log k), k even, B > 4 log 2
RegionReport region_half_integral(long k, const Int& D, double B = 2.8,
                                std::optional<long> k0 = {});

// c^{k,p^mu m0}(p^mu n, p^mu r) = a1 c^{k,p^{2mu} m0}(p^{2mu}n, p^{2mu}r; n, p^mu r)
//                               + a2 c^{k,p^{mu-1} m0}(p^{mu-1}n, p^{mu-1}r)
// over the samples; a1, a2 fitted by least squares on the midpoints.
struct ConsecutiveFit {
    BoundedComplex alpha1, alpha2;
    std::vector<BoundedReal> residuals;  // |c_A - a1 c_B - a2 c_C| per sample
    std::vector<BoundedReal> budgets;    // combined uncertainty per sample
    bool residuals_ok = false;
    bool alphas_positive = false;
};
ConsecutiveFit verify_consecutive(long k, const Int& p, long mu,
                                  const HalfIntegralIndexMatrix& m0,
                                  const std::vector<JacobiIndex>& samples,
                                  std::optional<TruncationPlan> plan = {});

}  // namespace jpcert
