#include "jpcert/kloosterman.hpp"

#include <numeric>
#include <string>

#include "jpcert/errors.hpp"

namespace jpcert {

namespace {

long to_long(const Int& v) {
    if (v > 1000000000L || v < -1000000000L)
        throw DomainError("modulus too large for dense summation");
    return v.convert_to<long>();
}

long lmod(const Int& v, long c) { return to_long(mod_reduce(v, Int(c))); }

// units h mod c with their inverses h'
std::vector<std::pair<long, long>> units_with_inverses(long c) {
    std::vector<std::pair<long, long>> out;
    if (c == 1) {
        out.emplace_back(0, 0);  // the single residue, h h' == 1 trivially
        return out;
    }
    std::vector<long> inv(static_cast<size_t>(c), -1);
    for (long h = 1; h < c; ++h) {
        if (inv[static_cast<size_t>(h)] != -1 || std::gcd(h, c) != 1) continue;
        long x = to_long(mod_inverse(h, c).value);
        inv[static_cast<size_t>(h)] = x;
        inv[static_cast<size_t>(x)] = h;
    }
    for (long h = 1; h < c; ++h)
        if (std::gcd(h, c) == 1) out.emplace_back(h, inv[static_cast<size_t>(h)]);
    return out;
}

// residue class of (-1)^w mod 4, as a long in {1, 3}
long minus_one_pow_mod4(long w) { return (w % 2 == 0) ? 1 : 3; }

void check_half_integral_residues(const HalfIntegralSumParams& p) {
    long want = minus_one_pow_mod4(p.w);
    for (const Int* t : {&p.u, &p.v}) {
        long m4 = lmod(*t, 4);
        if (m4 != 0 && m4 != want)
            throw BadResidueClass("u, v must be 0 or (-1)^w mod 4");
    }
}

}  // namespace

BoundedComplex kloosterman_1d(const KloostermanParams1D& p, Prec prec) {
    if (p.c < 1) throw DomainError("kloosterman_1d: c must be >= 1");
    const long c = to_long(p.c);
    auto table = unit_root_table(c, prec);
    const long r = lmod(p.r, c), m = lmod(p.m, c);
    ComplexAccumulator acc(prec);
    for (auto [h, hp] : units_with_inverses(c)) {
        long e = static_cast<long>(((__int128)r * h + (__int128)m * hp) % c);
        acc.add(table[static_cast<size_t>(e)]);
    }
    return acc.value();
}

CycVec kloosterman_1d_exact(const KloostermanParams1D& p) {
    if (p.c < 1) throw DomainError("kloosterman_1d_exact: c must be >= 1");
    const long c = to_long(p.c);
    const long r = lmod(p.r, c), m = lmod(p.m, c);
    CycVec v(c);
    for (auto [h, hp] : units_with_inverses(c))
        v.add_root(static_cast<long>(((__int128)r * h + (__int128)m * hp) % c));
    return v;
}

namespace {

// iterate x over {0,..,c-1}^g, calling f(x, A, B) with
// A = (m[x] + r x + n) mod c and B = (r' x) mod c
template <typename F>
void for_each_x(const JacobiSumParams& p, long c, F&& f) {
    const long g = p.m.g();
    std::vector<Int> x(static_cast<size_t>(g), 0);
    while (true) {
        Int a = p.m.m_bracket(x) + p.n;
        Int b = 0;
        for (long i = 0; i < g; ++i) {
            a += p.r[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            b += p.r_prime[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
        }
        f(lmod(a, c), lmod(b, c));
        long i = 0;
        for (; i < g; ++i) {
            Int& xi = x[static_cast<size_t>(i)];
            xi += 1;
            if (xi < c) break;
            xi = 0;
        }
        if (i == g) break;
    }
}

void check_jacobi_params(const JacobiSumParams& p) {
    if (p.c < 1) throw DomainError("Jacobi sum: c must be >= 1");
    if (static_cast<long>(p.r.size()) != p.m.g() ||
        static_cast<long>(p.r_prime.size()) != p.m.g())
        throw DimensionMismatch("Jacobi sum: r, r' must have length g");
}

}  // namespace

BoundedComplex kloosterman_g(const JacobiSumParams& p, Prec prec) {
    check_jacobi_params(p);
    const long c = to_long(p.c);
    auto table = unit_root_table(c, prec);
    auto units = units_with_inverses(c);
    const long np = lmod(p.n_prime, c);
    ComplexAccumulator acc(prec);
    for_each_x(p, c, [&](long a, long b) {
        for (auto [y, ybar] : units) {
            long e = static_cast<long>(((__int128)a * ybar + (__int128)np * y + b) % c);
            acc.add(table[static_cast<size_t>(e)]);
        }
    });
    return acc.value();
}

BoundedComplex h_jacobi(const JacobiSumParams& p, Prec prec, bool accelerated) {
    check_jacobi_params(p);
    const long c = to_long(p.c);
    const long g = p.m.g();
    BoundedComplex ksum(prec);
    if (accelerated && g == 1) {
        // x-sum collapses to a quadratic Gauss sum for each unit y
        auto table = unit_root_table(c, prec);
        auto units = units_with_inverses(c);
        const Int m_scalar = p.m.det_two_m() / 2;
        const long np = lmod(p.n_prime, c), n0 = lmod(p.n, c);
        BoundedComplex total(prec);
        for (auto [y, ybar] : units) {
            Int a_coef = mod_reduce(m_scalar * ybar, p.c);
            Int b_coef = mod_reduce(p.r[0] * ybar + p.r_prime[0], p.c);
            BoundedComplex xs = quad_gauss_any(a_coef, b_coef, p.c, prec);
            long e = static_cast<long>(((__int128)n0 * ybar + (__int128)np * y) % c);
            total.add_assign(xs * table[static_cast<size_t>(e)]);
        }
        ksum = total;
    } else {
        ksum = kloosterman_g(p, prec);
    }
    Rational q = p.m.r_m_inverse_rt(p.r_prime, p.r);
    BoundedComplex phase = BoundedComplex::unit_rational(q / (2 * Rational(p.c)), prec);
    BoundedReal scale = BoundedReal::from_int(p.c, prec).pow_half(-(g + 2));
    return (ksum * phase).scaled(scale);
}

BoundedComplex h_plusminus(const JacobiSumParams& p, long k, Prec prec, bool accelerated) {
    BoundedComplex plus = h_jacobi(p, prec, accelerated);
    JacobiSumParams neg = p;
    for (Int& v : neg.r_prime) v = -v;
    BoundedComplex minus = h_jacobi(neg, prec, accelerated);
    if (k % 2 == 0) return plus + minus;
    return plus - minus;
}

namespace {

struct HalfIntegralTerm {
    long index;   // power of zeta_{4c} (or zeta_c scaled by caller)
    int sign;     // +-1 from the real characters
    long i_pow;   // power of i from the epsilon factor
};

// terms of sum_delta (4c/delta) (-4/delta)^(w+1/2) e_{4c}(u delta + v delta^{-1}),
// delta over [1, range) coprime to 4c, inverses mod 4c
std::vector<HalfIntegralTerm> kohnen_terms(const HalfIntegralSumParams& p, long range,
                                           HalfIntegralConvention conv) {
    const long c = to_long(p.c);
    const long fourc = 4 * c;
    const long u = lmod(p.u, fourc), v = lmod(p.v, fourc);
    std::vector<HalfIntegralTerm> terms;
    for (long d = 1; d < range; ++d) {
        if (std::gcd(d, fourc) != 1) continue;
        long dinv = to_long(mod_inverse(d, fourc).value);
        int sign = kronecker_symbol(fourc, d);
        if (p.w % 2 != 0) sign *= kronecker_symbol(-4, d);
        long e = epsilon_factor(d).i_power;
        if (conv == HalfIntegralConvention::EpsilonInverse) e = (4 - e) % 4;
        long idx = static_cast<long>(((__int128)u * d + (__int128)v * dinv) % fourc);
        terms.push_back({idx, sign, e});
    }
    return terms;
}

}  // namespace

BoundedComplex h_kohnen(const HalfIntegralSumParams& p, Prec prec,
                        HalfIntegralConvention conv) {
    if (p.c < 1) throw DomainError("h_kohnen: c must be >= 1");
    check_half_integral_residues(p);
    const long c = to_long(p.c);
    auto table = unit_root_table(4 * c, prec);
    ComplexAccumulator acc(prec);
    for (const auto& t : kohnen_terms(p, 4 * c, conv))
        acc.add_rotated(table[static_cast<size_t>(t.index)], t.i_pow, t.sign);
    // (1 - (-1)^w i)(1 + (4|c)) / (4c)
    BoundedComplex pref(BoundedReal::from_long(1, prec),
                        BoundedReal::from_long(p.w % 2 == 0 ? -1 : 1, prec));
    long chi4 = kronecker_symbol(4, p.c);
    BoundedReal scale = BoundedReal::from_long(1 + chi4, prec) /
                        BoundedReal::from_long(4 * c, prec);
    return (acc.value() * pref).scaled(scale);
}

ExactValue h_kohnen_exact(const HalfIntegralSumParams& p, HalfIntegralConvention conv) {
    if (p.c < 1) throw DomainError("h_kohnen_exact: c must be >= 1");
    check_half_integral_residues(p);
    const long c = to_long(p.c);
    CycVec v(4 * c);
    for (const auto& t : kohnen_terms(p, 4 * c, conv))
        v.add_root(t.index + t.i_pow * c, t.sign);  // i = zeta_{4c}^c
    // (1 - (-1)^w i) v
    CycVec w = (p.w % 2 == 0) ? cyc_sub(v, cyc_rotate(v, c)) : cyc_add(v, cyc_rotate(v, c));
    long chi4 = kronecker_symbol(4, p.c);
    return ExactValue{cyc_scale(w, 1 + chi4), Int(4) * c};
}

BoundedComplex h_auxiliary(AuxKind kind, const HalfIntegralSumParams& p, int alpha,
                           Prec prec, HalfIntegralConvention conv) {
    if (p.c < 1) throw DomainError("h_auxiliary: c must be >= 1");
    const long c = to_long(p.c);
    switch (kind) {
        case AuxKind::DoubleH: {
            if (c % 2 != 0) throw ParityMismatch("DoubleH requires even c");
            if (alpha != 1 && alpha != 2) throw DomainError("DoubleH: alpha must be 1 or 2");
            check_half_integral_residues(p);
            auto table = unit_root_table(4 * c, prec);
            ComplexAccumulator acc(prec);
            for (const auto& t : kohnen_terms(p, alpha * c, conv))
                acc.add_rotated(table[static_cast<size_t>(t.index)], t.i_pow, t.sign);
            BoundedComplex pref(BoundedReal::from_long(1, prec),
                                BoundedReal::from_long(p.w % 2 == 0 ? -1 : 1, prec));
            return (acc.value() * pref)
                .scaled(BoundedReal::from_long(1, prec) / BoundedReal::from_long(4 * c, prec));
        }
        case AuxKind::ScriptH: {
            auto table = unit_root_table(4 * c, prec);
            ComplexAccumulator acc(prec);
            for (const auto& t : kohnen_terms(p, 4 * c, conv))
                acc.add_rotated(table[static_cast<size_t>(t.index)], t.i_pow, t.sign);
            long chi4 = kronecker_symbol(4, p.c);
            BoundedReal scale = BoundedReal::from_long(1 + chi4, prec) /
                                BoundedReal::from_long(4 * c, prec);
            return acc.value().scaled(scale);
        }
        case AuxKind::ScriptHPrime: {
            if (c % 2 == 0) throw ParityMismatch("ScriptHPrime requires odd c");
            auto table = unit_root_table(c, prec);
            const long u = lmod(p.u, c), v = lmod(p.v, c);
            ComplexAccumulator acc(prec);
            for (auto [d, dinv] : units_with_inverses(c)) {
                int sign = kronecker_symbol(d, p.c);
                long idx = static_cast<long>(((__int128)u * d + (__int128)v * dinv) % c);
                acc.add_rotated(table[static_cast<size_t>(idx)], 0, sign);
            }
            // (1/c)(4/-c)(-4/c)^(-w-1/2)
            int sign = kronecker_symbol(4, -p.c);
            if (p.w % 2 != 0) sign *= kronecker_symbol(-4, p.c);
            long e = epsilon_factor(p.c).i_power;
            long ipow = (conv == HalfIntegralConvention::EpsilonDirect) ? (4 - e) % 4 : e;
            BoundedComplex out = acc.value().times_i_power(ipow);
            out = out.scaled(BoundedReal::from_long(sign, prec) / BoundedReal::from_long(c, prec));
            return out;
        }
    }
    throw DomainError("h_auxiliary: unknown kind");
}

ExactValue h_auxiliary_exact(AuxKind kind, const HalfIntegralSumParams& p, int alpha,
                             HalfIntegralConvention conv) {
    if (p.c < 1) throw DomainError("h_auxiliary_exact: c must be >= 1");
    const long c = to_long(p.c);
    switch (kind) {
        case AuxKind::DoubleH: {
            if (c % 2 != 0) throw ParityMismatch("DoubleH requires even c");
            if (alpha != 1 && alpha != 2) throw DomainError("DoubleH: alpha must be 1 or 2");
            check_half_integral_residues(p);
            CycVec v(4 * c);
            for (const auto& t : kohnen_terms(p, alpha * c, conv))
                v.add_root(t.index + t.i_pow * c, t.sign);
            CycVec w = (p.w % 2 == 0) ? cyc_sub(v, cyc_rotate(v, c))
                                      : cyc_add(v, cyc_rotate(v, c));
            return ExactValue{std::move(w), Int(4) * c};
        }
        case AuxKind::ScriptH: {
            CycVec v(4 * c);
            for (const auto& t : kohnen_terms(p, 4 * c, conv))
                v.add_root(t.index + t.i_pow * c, t.sign);
            long chi4 = kronecker_symbol(4, p.c);
            return ExactValue{cyc_scale(v, 1 + chi4), Int(4) * c};
        }
        case AuxKind::ScriptHPrime: {
            if (c % 2 == 0) throw ParityMismatch("ScriptHPrime requires odd c");
            const long u = lmod(p.u, c), v = lmod(p.v, c);
            CycVec vec(4 * c);
            for (auto [d, dinv] : units_with_inverses(c)) {
                int sign = kronecker_symbol(d, p.c);
                long idx = static_cast<long>(((__int128)u * d + (__int128)v * dinv) % c);
                vec.add_root(4 * idx, sign);  // zeta_c = zeta_{4c}^4
            }
            int sign = kronecker_symbol(4, -p.c);
            if (p.w % 2 != 0) sign *= kronecker_symbol(-4, p.c);
            long e = epsilon_factor(p.c).i_power;
            long ipow = (conv == HalfIntegralConvention::EpsilonDirect) ? (4 - e) % 4 : e;
            vec = cyc_rotate(vec, ipow * c);
            if (sign < 0) vec = cyc_neg(vec);
            return ExactValue{std::move(vec), Int(c)};
        }
    }
    throw DomainError("h_auxiliary_exact: unknown kind");
}

namespace {

void check_identity_1d_pre(const Int& p, long rho, long mu, const Int& r, const Int& m,
                           const Int& c) {
    std::string why;
    if (rho < 1 || mu < 1) why += " rho,mu must be >= 1;";
    if (c % p != 0) why += " p | c fails;";
    if (r % p == 0) why += " p !| r fails;";
    if (m % p == 0) why += " p !| m fails;";
    if (!why.empty()) throw PreconditionViolated("verify_identity_1d:" + why);
}

Int ipow(const Int& b, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

BoundedReal verify_identity_1d(const Int& p, long rho, long mu, const Int& r, const Int& m,
                               const Int& c, Prec prec) {
    check_identity_1d_pre(p, rho, mu, r, m, c);
    BoundedComplex lhs = kloosterman_1d({r * ipow(p, rho), m * ipow(p, mu), c}, prec);
    BoundedComplex rhs1 = kloosterman_1d({r, m * ipow(p, rho + mu), c}, prec);
    BoundedComplex rhs2 =
        kloosterman_1d({r * ipow(p, rho - 1), m * ipow(p, mu - 1), c / p}, prec);
    BoundedComplex rhs = rhs1 + rhs2.scaled(BoundedReal::from_int(p, prec));
    return (lhs - rhs).abs_ball();
}

bool verify_identity_1d_exact(const Int& p, long rho, long mu, const Int& r, const Int& m,
                              const Int& c) {
    check_identity_1d_pre(p, rho, mu, r, m, c);
    CycVec lhs = kloosterman_1d_exact({r * ipow(p, rho), m * ipow(p, mu), c});
    CycVec rhs1 = kloosterman_1d_exact({r, m * ipow(p, rho + mu), c});
    CycVec rhs2 = kloosterman_1d_exact({r * ipow(p, rho - 1), m * ipow(p, mu - 1), c / p});
    CycVec rhs = cyc_add(rhs1, cyc_scale(cyc_embed(rhs2, to_long(c)), p));
    return cyc_is_zero(cyc_sub(lhs, rhs));
}

BoundedReal verify_identity_g(const Int& p, long mu, long rho,
                              const HalfIntegralIndexMatrix& m, const Int& c, const Int& n,
                              const std::vector<Int>& r, const Int& n_prime,
                              const std::vector<Int>& r_prime, Prec prec) {
    std::string why;
    if (p % 2 == 0) why += " p must be odd;";
    if (rho < 1 || mu < 1) why += " rho,mu must be >= 1;";
    if (c % p != 0) why += " p | c fails;";
    for (const Int& e : m.two_m_entries())
        if (e % p != 0) { why += " p | m fails;"; break; }
    for (const Int& e : r)
        if (e % p != 0) { why += " p | r fails;"; break; }
    for (const Int& e : r_prime)
        if (e % p != 0) { why += " p | r' fails;"; break; }
    if (n % p == 0) why += " p !| n fails;";
    if (n_prime % p == 0) why += " p !| n' fails;";
    if (!why.empty()) throw PreconditionViolated("verify_identity_g:" + why);

    auto scale_vec = [](const std::vector<Int>& v, const Int& s) {
        std::vector<Int> out = v;
        for (Int& x : out) x *= s;
        return out;
    };
    auto div_vec = [](const std::vector<Int>& v, const Int& s) {
        std::vector<Int> out = v;
        for (Int& x : out) x /= s;
        return out;
    };
    const Int pmu = ipow(p, mu), prho = ipow(p, rho);
    JacobiSumParams lhs{m.scaled(pmu), c, n * pmu, scale_vec(r, pmu), n_prime * prho, r_prime};
    JacobiSumParams rhs1{m.scaled(pmu * prho), c, n * pmu * prho, scale_vec(r, pmu * prho),
                         n_prime, r_prime};
    JacobiSumParams rhs2{m.scaled(pmu / p), c / p, n * pmu / p, scale_vec(r, pmu / p),
                         n_prime * prho / p, div_vec(r_prime, p)};
    // The x-split over (Z/p)^g contributes p^g on top of the one-dimensional
    // identity's p, so the last term carries p^(g+1) (p^2 in degree 1).
    BoundedComplex sum = kloosterman_g(rhs1, prec) +
                         kloosterman_g(rhs2, prec)
                             .scaled(BoundedReal::from_int(ipow(p, m.g() + 1), prec));
    return (kloosterman_g(lhs, prec) - sum).abs_ball();
}

KloorelnsReport verify_kloorelns(const Int& c, const Int& n, const Int& r, const Int& n_prime,
                                 const Int& r_prime, long k, Prec prec,
                                 HalfIntegralConvention conv) {
    if (k % 2 != 0) throw OddWeight("verify_kloorelns: k must be even");
    HalfIntegralIndexMatrix m1 = HalfIntegralIndexMatrix::from_scalar_index(1);
    JacobiSumParams plus{m1, c, n, {r}, n_prime, {r_prime}};
    JacobiSumParams minus{m1, c, n, {r}, n_prime, {-r_prime}};
    KloorelnsReport rep{
        h_jacobi(plus, prec),
        h_jacobi(minus, prec),
        h_kohnen({k - 1, c, 4 * n_prime - r_prime * r_prime, 4 * n - r * r}, prec, conv),
        false,
        false,
        BoundedComplex(prec)};
    const bool jp0 = rep.jacobi_plus.real().contains_zero() && rep.jacobi_plus.imag().contains_zero();
    const bool jm0 = rep.jacobi_minus.real().contains_zero() && rep.jacobi_minus.imag().contains_zero();
    const bool k0 = rep.kohnen.real().contains_zero() && rep.kohnen.imag().contains_zero();
    rep.both_vanish = jp0 && jm0 && k0;
    if (!k0 && !jp0 && rep.kohnen.abs_ball().definitely_positive()) {
        rep.ratio_defined = true;
        rep.ratio = rep.jacobi_plus / rep.kohnen;
    }
    return rep;
}

BoundedReal bound_check_h(const JacobiSumParams& p, Prec prec) {
    bool plus = p.n_prime == p.n && p.r_prime == p.r;
    bool minus = p.n_prime == p.n;
    if (minus)
        for (size_t i = 0; i < p.r.size(); ++i)
            if (p.r_prime[i] != -p.r[i]) { minus = false; break; }
    if (!plus && !minus)
        throw PreconditionViolated("bound_check_h: needs diagonal arguments n'=n, r'=+-r");
    const long g = p.m.g();
    JacobiIndex idx{p.n, p.r};
    Int D = discriminant(idx, p.m);
    DivisorStats cs = divisor_stats(p.c);
    Int lead = (Int(1) << cs.omega) * gcd_int(D, p.c);
    BoundedReal bound = BoundedReal::from_int(lead, prec) *
                        BoundedReal::from_int(p.c, prec).pow_half(g - 2);
    return bound - h_jacobi(p, prec).abs_ball();
}

HalfIntegralConvention calibrate_half_integral_convention(long k, Prec prec) {
    // The degree-1 Jacobi side is unambiguous; pick the reading whose
    // Kloosterman-equality ratios are constant across c.
    struct Probe {
        long c, n, r, np, rp;
    };
    const Probe probes[] = {{1, 1, 1, 1, 1}, {2, 1, 1, 1, 0}, {3, 1, 1, 2, 1},
                            {4, 1, 1, 1, 1}, {5, 1, 0, 1, 0}, {7, 1, 1, 2, 1}};
    for (auto conv : {HalfIntegralConvention::EpsilonDirect,
                      HalfIntegralConvention::EpsilonInverse}) {
        bool constant = true;
        bool have_first = false;
        BoundedComplex first(prec);
        for (const Probe& q : probes) {
            KloorelnsReport rep = verify_kloorelns(q.c, q.n, q.r, q.np, q.rp, k, prec, conv);
            if (!rep.ratio_defined) continue;
            if (!have_first) {
                first = rep.ratio;
                have_first = true;
                continue;
            }
            BoundedReal dev = (rep.ratio - first).abs_ball();
            if (!dev.certainly_less(BoundedReal::from_rational(Rational(1, 1000000), prec)))
                constant = false;
        }
        if (constant && have_first) return conv;
    }
    return kDefaultConvention;
}

}  // namespace jpcert
