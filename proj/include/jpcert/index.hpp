// Jacobi form index bookkeeping: the half-integral g x g index matrix m is
// stored as the integral matrix 2m (symmetric, even diagonal, positive
// definite), and an index (n, r) carries its discriminant
// D = det(2n, r; r^t, 2m).  All linear algebra here is exact.
#pragma once

#include <vector>

#include "jpcert/arith.hpp"

namespace jpcert {

class HalfIntegralIndexMatrix {
  public:
    // entries: row-major 2m.  Validates symmetry, even diagonal and positive
    // definiteness (leading principal minors); throws BadIndexMatrix.
    static HalfIntegralIndexMatrix from_two_m(long g, std::vector<Int> entries);
    // g = 1 scalar index m (so 2m = [2m]).
    static HalfIntegralIndexMatrix from_scalar_index(const Int& m);

    long g() const { return g_; }
    const Int& two_m_at(long i, long j) const { return e_[static_cast<size_t>(i * g_ + j)]; }
    const std::vector<Int>& two_m_entries() const { return e_; }

    const Int& det_two_m() const { return det_; }
    // adjugate of 2m: adj * (2m) = det(2m) * I
    const std::vector<Int>& adjugate_two_m() const { return adj_; }

    // (2m)[x] = x^t (2m) x; even for integral x
    Int two_m_bracket(const std::vector<Int>& x) const;
    // m[x] = (2m)[x] / 2, an exact integer
    Int m_bracket(const std::vector<Int>& x) const;
    // r' m^{-1} r^t as an exact rational (r, r' row vectors)
    Rational r_m_inverse_rt(const std::vector<Int>& r_prime, const std::vector<Int>& r) const;

    // index matrix scaled by a positive integer s (2(sm) = s * 2m)
    HalfIntegralIndexMatrix scaled(const Int& s) const;

  private:
    HalfIntegralIndexMatrix() = default;
    long g_ = 0;
    std::vector<Int> e_;
    Int det_;
    std::vector<Int> adj_;
};

struct JacobiIndex {
    Int n;
    std::vector<Int> r;
};

// exact determinant of a dense integer matrix (row-major), Laplace expansion
Int int_matrix_det(long n, const std::vector<Int>& a);

// D = det(2n, r; r^t, 2m); equals 4nm - r^2 for g = 1
Int discriminant(const JacobiIndex& idx, const HalfIntegralIndexMatrix& m);

// 1 iff D = D' and r == r' (mod Z^g * 2m)
int delta_m(const JacobiIndex& a, const JacobiIndex& b, const HalfIntegralIndexMatrix& m);

// true iff 2r == 0 (mod Z^g * 2m), i.e. r m^{-1} is integral
bool two_r_congruent_zero(const std::vector<Int>& r, const HalfIntegralIndexMatrix& m);

JacobiIndex negated_r(const JacobiIndex& idx);

}  // namespace jpcert
