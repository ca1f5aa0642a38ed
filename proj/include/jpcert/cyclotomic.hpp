// Exact arithmetic in Z[zeta_N]: values are integer coefficient vectors over
// the group ring Z[x]/(x^N - 1), evaluated at zeta_N = e(1/N).  The
// representation is not canonical, so the zero test reduces modulo the N-th
// cyclotomic polynomial; that reduction is the authority for every exact
// identity residual.
#pragma once

#include <vector>

#include "jpcert/arith.hpp"

namespace jpcert {

struct CycVec {
    long modulus = 1;        // N: order of the root of unity
    std::vector<Int> coeff;  // length N; value = sum_j coeff[j] zeta_N^j

    explicit CycVec(long n = 1) : modulus(n), coeff(static_cast<size_t>(n)) {}

    // add m * zeta^e (e taken mod N, any sign)
    void add_root(long e, const Int& m = 1);
};

CycVec cyc_add(const CycVec& a, const CycVec& b);
CycVec cyc_sub(const CycVec& a, const CycVec& b);
CycVec cyc_neg(const CycVec& a);
CycVec cyc_scale(const CycVec& a, const Int& s);
// a * zeta^shift
CycVec cyc_rotate(const CycVec& a, long shift);
// reinterpret in Z[zeta_M] for modulus | M
CycVec cyc_embed(const CycVec& a, long new_modulus);
// full convolution product (same modulus)
CycVec cyc_mul(const CycVec& a, const CycVec& b);

bool cyc_raw_equal(const CycVec& a, const CycVec& b);

// Coefficients of the cyclotomic polynomial Phi_n, ascending, degree phi(n).
// Cached; thread safe.
const std::vector<Int>& cyclotomic_polynomial(long n);

// True iff the represented element of Z[zeta_N] is zero.  Fast paths (zero
// vector, antipodal symmetry) are tried before the Phi_N reduction.
bool cyc_is_zero(const CycVec& a);

// Exact rational multiple of a cyclotomic integer: vec(zeta) / denom.
struct ExactValue {
    CycVec vec;
    Int denom = 1;
};

bool exact_equal(const ExactValue& a, const ExactValue& b);
ExactValue exact_sub(const ExactValue& a, const ExactValue& b);
bool exact_is_zero(const ExactValue& a);

}  // namespace jpcert
