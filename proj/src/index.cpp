#include "jpcert/index.hpp"

#include "jpcert/errors.hpp"

namespace jpcert {

Int int_matrix_det(long n, const std::vector<Int>& a) {
    if (n == 0) return 1;
    if (n == 1) return a[0];
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    Int det = 0;
    std::vector<Int> minor(static_cast<size_t>((n - 1) * (n - 1)));
    for (long col = 0; col < n; ++col) {
        if (a[static_cast<size_t>(col)] != 0) {
            for (long i = 1; i < n; ++i) {
                long k = 0;
                for (long j = 0; j < n; ++j) {
                    if (j == col) continue;
                    minor[static_cast<size_t>((i - 1) * (n - 1) + k)] =
                        a[static_cast<size_t>(i * n + j)];
                    ++k;
                }
            }
            Int term = a[static_cast<size_t>(col)] * int_matrix_det(n - 1, minor);
            if (col % 2 == 0) det += term;
            else det -= term;
        }
    }
    return det;
}

namespace {

std::vector<Int> adjugate(long n, const std::vector<Int>& a) {
    std::vector<Int> adj(static_cast<size_t>(n * n));
    if (n == 1) {
        adj[0] = 1;
        return adj;
    }
    std::vector<Int> minor(static_cast<size_t>((n - 1) * (n - 1)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long mi = 0;
            for (long r = 0; r < n; ++r) {
                if (r == i) continue;
                long mj = 0;
                for (long c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[static_cast<size_t>(mi * (n - 1) + mj)] =
                        a[static_cast<size_t>(r * n + c)];
                    ++mj;
                }
                ++mi;
            }
            Int cof = int_matrix_det(n - 1, minor);
            if ((i + j) % 2 != 0) cof = -cof;
            adj[static_cast<size_t>(j * n + i)] = cof;  // transpose of cofactors
        }
    return adj;
}

}  // namespace

HalfIntegralIndexMatrix HalfIntegralIndexMatrix::from_two_m(long g, std::vector<Int> entries) {
    if (g < 1 || static_cast<long>(entries.size()) != g * g)
        throw BadIndexMatrix("index matrix: wrong shape");
    HalfIntegralIndexMatrix m;
    m.g_ = g;
    m.e_ = std::move(entries);
    for (long i = 0; i < g; ++i) {
        if (m.two_m_at(i, i) % 2 != 0)
            throw BadIndexMatrix("index matrix: diagonal of 2m must be even");
        for (long j = 0; j < i; ++j)
            if (m.two_m_at(i, j) != m.two_m_at(j, i))
                throw BadIndexMatrix("index matrix: 2m must be symmetric");
    }
    // positive definiteness via leading principal minors
    for (long k = 1; k <= g; ++k) {
        std::vector<Int> lead(static_cast<size_t>(k * k));
        for (long i = 0; i < k; ++i)
            for (long j = 0; j < k; ++j)
                lead[static_cast<size_t>(i * k + j)] = m.two_m_at(i, j);
        if (int_matrix_det(k, lead) <= 0)
            throw BadIndexMatrix("index matrix: 2m must be positive definite");
    }
    m.det_ = int_matrix_det(g, m.e_);
    m.adj_ = adjugate(g, m.e_);
    return m;
}

HalfIntegralIndexMatrix HalfIntegralIndexMatrix::from_scalar_index(const Int& m) {
    return from_two_m(1, {2 * m});
}

Int HalfIntegralIndexMatrix::two_m_bracket(const std::vector<Int>& x) const {
    if (static_cast<long>(x.size()) != g_) throw DimensionMismatch("two_m_bracket");
    Int s = 0;
    for (long i = 0; i < g_; ++i)
        for (long j = 0; j < g_; ++j)
            s += x[static_cast<size_t>(i)] * two_m_at(i, j) * x[static_cast<size_t>(j)];
    return s;
}

Int HalfIntegralIndexMatrix::m_bracket(const std::vector<Int>& x) const {
    Int s = two_m_bracket(x);
    return s / 2;  // exact: even diagonal makes (2m)[x] even
}

Rational HalfIntegralIndexMatrix::r_m_inverse_rt(const std::vector<Int>& r_prime,
                                                 const std::vector<Int>& r) const {
    if (static_cast<long>(r.size()) != g_ || static_cast<long>(r_prime.size()) != g_)
        throw DimensionMismatch("r_m_inverse_rt");
    // m^{-1} = 2 (2m)^{-1} = 2 adj / det
    Int num = 0;
    for (long i = 0; i < g_; ++i)
        for (long j = 0; j < g_; ++j)
            num += r_prime[static_cast<size_t>(i)] * adj_[static_cast<size_t>(i * g_ + j)] *
                   r[static_cast<size_t>(j)];
    return Rational(2 * num, det_);
}

HalfIntegralIndexMatrix HalfIntegralIndexMatrix::scaled(const Int& s) const {
    if (s < 1) throw DomainError("index scale must be positive");
    std::vector<Int> e = e_;
    for (Int& v : e) v *= s;
    return from_two_m(g_, std::move(e));
}

Int discriminant(const JacobiIndex& idx, const HalfIntegralIndexMatrix& m) {
    long g = m.g();
    if (static_cast<long>(idx.r.size()) != g)
        throw DimensionMismatch("discriminant: r has wrong length");
    long n = g + 1;
    std::vector<Int> block(static_cast<size_t>(n * n));
    block[0] = 2 * idx.n;
    for (long j = 0; j < g; ++j) {
        block[static_cast<size_t>(j + 1)] = idx.r[static_cast<size_t>(j)];
        block[static_cast<size_t>((j + 1) * n)] = idx.r[static_cast<size_t>(j)];
        for (long i = 0; i < g; ++i)
            block[static_cast<size_t>((j + 1) * n + i + 1)] = m.two_m_at(j, i);
    }
    return int_matrix_det(n, block);
}

int delta_m(const JacobiIndex& a, const JacobiIndex& b, const HalfIntegralIndexMatrix& m) {
    if (discriminant(a, m) != discriminant(b, m)) return 0;
    // (r - r') (2m)^{-1} integral  <=>  det | (r - r') adj componentwise
    long g = m.g();
    const std::vector<Int>& adj = m.adjugate_two_m();
    for (long j = 0; j < g; ++j) {
        Int s = 0;
        for (long i = 0; i < g; ++i)
            s += (a.r[static_cast<size_t>(i)] - b.r[static_cast<size_t>(i)]) *
                 adj[static_cast<size_t>(i * g + j)];
        if (s % m.det_two_m() != 0) return 0;
    }
    return 1;
}

bool two_r_congruent_zero(const std::vector<Int>& r, const HalfIntegralIndexMatrix& m) {
    // r m^{-1} integral  <=>  det | 2 r adj componentwise
    long g = m.g();
    const std::vector<Int>& adj = m.adjugate_two_m();
    for (long j = 0; j < g; ++j) {
        Int s = 0;
        for (long i = 0; i < g; ++i)
            s += r[static_cast<size_t>(i)] * adj[static_cast<size_t>(i * g + j)];
        if ((2 * s) % m.det_two_m() != 0) return false;
    }
    return true;
}

JacobiIndex negated_r(const JacobiIndex& idx) {
    JacobiIndex out{idx.n, idx.r};
    for (Int& v : out.r) v = -v;
    return out;
}

}  // namespace jpcert
