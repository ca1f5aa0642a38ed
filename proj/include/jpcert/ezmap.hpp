// The Eichler-Zagier correspondence at index 1: the coefficient relabeling
// (n,r) -> D = 4n - r^2, Kohnen's half-integral Poincare coefficients
// g_D(t) with a certified tail, and the numerical verification that
// c_{n,r}(n',r') is a single constant multiple of g_D(D').
#pragma once

#include <utility>
#include <vector>

#include "jpcert/jacobi.hpp"

namespace jpcert {

// D = 4n - r^2; throws NonpositiveDiscriminant when D <= 0.
Int ez_relabel(const Int& n, const Int& r);

struct GdValue {
    BoundedComplex value;
    BoundedReal tail;
    long c_max = 0;
};

// g_D(t) = (2/3)[ delta_{D,t} + (-1)^(k/2) pi sqrt(2) (t/D)^(k/2-3/4)
//                 sum_{c>=1} H_c(t,D) J_{k-3/2}(pi sqrt(tD)/c) ]
// k even >= 6; D, t = 0, 3 (mod 4).  |H_c| <= 2 sqrt(2) feeds the tail.
GdValue kohnen_gd(long k, const Int& D, const Int& t, const TruncationPlan& plan,
                  HalfIntegralConvention conv = kDefaultConvention);

struct J2HEntry {
    Int n_prime, r_prime, d_prime;
    BoundedComplex jacobi_coeff;  // c_{n,r}(n',r'), tails folded into radii
    BoundedComplex gd;            // g_D(D'), tails folded in
    bool ratio_defined = false;
    BoundedComplex ratio;
};

struct J2HReport {
    std::vector<J2HEntry> entries;
    bool kappa_defined = false;
    BoundedComplex kappa;        // mean of the defined ratios
    double max_rel_spread = 0;   // max |ratio - kappa| / |kappa| over midpoints
};

// Evaluates both sides for each (n',r') target and fits the single constant.
J2HReport verify_j2h(long k, const Int& n, const Int& r,
                     const std::vector<std::pair<Int, Int>>& targets,
                     const TruncationPlan& plan,
                     HalfIntegralConvention conv = kDefaultConvention);

}  // namespace jpcert
