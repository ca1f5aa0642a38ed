// Explicit Poincare basis of the weight-k index-m Jacobi cusp space (g = 1):
// the "first" dim many series, indexed by the classical recipe
// D_mu = 4m([mu^2/4m]+1) - mu^2, n = [mu^2/4m] + 1 + lambda, r = mu,
// with an interval-determinant invertibility certificate for the
// coefficient matrix.
#pragma once

#include <vector>

#include "jpcert/jacobi.hpp"

namespace jpcert {

// dim S_k for level one: 0 for odd k or k < 12, else [k/12] - 1 when
// k == 2 (mod 12) and [k/12] otherwise.
long dim_cusp_elliptic(long k);

struct BasisEntry {
    long mu;
    long lambda;
    Int d_mu;
    JacobiIndex index;  // (n, r) with r = (mu)
};

struct BasisIndexSet {
    long k;
    Int m;
    bool relaxed;  // produced below the k >= m+12 floor
    std::vector<BasisEntry> entries;
};

// The classical index list.  Requires k >= m+12 unless relax is set
// (HypothesisViolated otherwise); relaxed results are extra-theorematic.
BasisIndexSet basis_indices(long k, const Int& m, bool relax = false);

// Number of listed indices: sum over mu of max(0, dim S - [mu^2/4m]).
long dim_jacobi_cusp(long k, const Int& m, bool relax = false);

enum class InvertibilityStatus { Invertible, Inconclusive };

struct BasisMatrixResult {
    long d;
    std::vector<CoefficientValue> entries;  // row-major: entry(i,j) = c_{P_i}(index_j)
    BoundedComplex determinant;             // interval determinant, tails folded in
    InvertibilityStatus status;
};

// Throws EmptyBasis when the index list is empty.
BasisMatrixResult basis_matrix(long k, const Int& m, const TruncationPlan& plan,
                               bool relax = false);

}  // namespace jpcert
