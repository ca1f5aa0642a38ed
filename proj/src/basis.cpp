#include "jpcert/basis.hpp"

#include "jpcert/errors.hpp"

namespace jpcert {

long dim_cusp_elliptic(long k) {
    if (k % 2 != 0 || k < 12) return 0;
    if (k % 12 == 2) return k / 12 - 1;
    return k / 12;
}

BasisIndexSet basis_indices(long k, const Int& m, bool relax) {
    if (m < 1) throw DomainError("basis_indices: m must be >= 1");
    if (!relax && Int(k) < m + 12)
        throw HypothesisViolated("basis_indices: needs k >= m + 12 (or the relax flag)");
    BasisIndexSet set{k, m, Int(k) < m + 12, {}};
    const long ml = m.convert_to<long>();
    const bool even = (k % 2 == 0);
    const long mu_lo = even ? 0 : 1;
    const long mu_hi = even ? ml : ml - 1;
    for (long mu = mu_lo; mu <= mu_hi; ++mu) {
        const long ell = even ? k + 2 * mu : k + 2 * mu - 1;
        const long floor_term = static_cast<long>((Int(mu) * mu / (4 * m)).convert_to<long>());
        const long count = dim_cusp_elliptic(ell) - floor_term;
        Int d_mu = 4 * m * (floor_term + 1) - Int(mu) * mu;
        for (long lambda = 0; lambda < count; ++lambda) {
            Int n = floor_term + 1 + lambda;
            set.entries.push_back({mu, lambda, d_mu, JacobiIndex{n, {Int(mu)}}});
        }
    }
    return set;
}

long dim_jacobi_cusp(long k, const Int& m, bool relax) {
    return static_cast<long>(basis_indices(k, m, relax).entries.size());
}

namespace {

// determinant of a d x d BoundedComplex matrix by Laplace expansion on the
// first row; d stays small at desk scale
BoundedComplex ball_det(long d, const std::vector<BoundedComplex>& a, Prec prec) {
    if (d == 0) return BoundedComplex::from_real(BoundedReal::from_long(1, prec));
    if (d == 1) return a[0];
    BoundedComplex det(prec);
    std::vector<BoundedComplex> minor;
    minor.reserve(static_cast<size_t>((d - 1) * (d - 1)));
    for (long col = 0; col < d; ++col) {
        minor.clear();
        for (long i = 1; i < d; ++i)
            for (long j = 0; j < d; ++j)
                if (j != col) minor.push_back(a[static_cast<size_t>(i * d + j)]);
        BoundedComplex term = a[static_cast<size_t>(col)] * ball_det(d - 1, minor, prec);
        if (col % 2 == 0) det.add_assign(term);
        else det.add_assign(-term);
    }
    return det;
}

}  // namespace

BasisMatrixResult basis_matrix(long k, const Int& m, const TruncationPlan& plan, bool relax) {
    BasisIndexSet set = basis_indices(k, m, relax);
    const long d = static_cast<long>(set.entries.size());
    if (d == 0) throw EmptyBasis("basis_matrix: the index list is empty");
    HalfIntegralIndexMatrix im = HalfIntegralIndexMatrix::from_scalar_index(m);

    BasisMatrixResult out;
    out.d = d;
    out.entries.reserve(static_cast<size_t>(d * d));
    std::vector<BoundedComplex> widened;
    widened.reserve(static_cast<size_t>(d * d));
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            CoefficientValue cv = coefficient(k, im, set.entries[static_cast<size_t>(i)].index,
                                              set.entries[static_cast<size_t>(j)].index, plan);
            BoundedReal re = cv.value.real(), imag = cv.value.imag();
            re.widen_by(cv.tail_bound);
            imag.widen_by(cv.tail_bound);
            widened.emplace_back(re, imag);
            out.entries.push_back(std::move(cv));
        }
    out.determinant = ball_det(d, widened, plan.prec);
    out.status = out.determinant.abs_ball().definitely_positive()
                     ? InvertibilityStatus::Invertible
                     : InvertibilityStatus::Inconclusive;
    return out;
}

}  // namespace jpcert
