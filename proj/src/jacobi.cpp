#include "jpcert/jacobi.hpp"

#include <cmath>

#include "jpcert/errors.hpp"

namespace jpcert {

TruncationPlan TruncationPlan::defaults_for(const Int& D, const Int& det_two_m) {
    // ceil(4 pi D / det) with a little slack, computed in plain doubles
    double ratio = 4.0 * 3.14159265358979324 * D.convert_to<double>() /
                   det_two_m.convert_to<double>();
    long c = static_cast<long>(std::ceil(ratio)) + 1;
    return {std::max<long>(10, c), kDefaultPrec};
}

BoundedReal petersson_lambda(long k, const HalfIntegralIndexMatrix& m, const Int& D,
                             Prec prec) {
    const long g = m.g();
    if (2 * k <= g + 2) throw BadWeight("petersson_lambda: requires k > g/2 + 1");
    if (D <= 0) throw NonpositiveDiscriminant("petersson_lambda: D must be positive");
    BoundedReal two_pow =
        BoundedReal::from_long(2, prec).pow_half((g - 1) * (2 * k - g - 2) - 2 * g);
    BoundedReal gamma = gamma_half_integer(2 * k - g - 2, prec);
    BoundedReal pi_pow = BoundedReal::pi(prec).pow_half(-2 * k + g + 2);
    BoundedReal det_m = BoundedReal::from_rational(
        Rational(m.det_two_m(), Int(1) << static_cast<unsigned>(g)), prec);
    BoundedReal det_pow = det_m.pow_half(2 * k - g - 3);
    BoundedReal d_pow = BoundedReal::from_int(D, prec).pow_half(-2 * k + g + 2);
    return two_pow * gamma * pi_pow * det_pow * d_pow;
}

BoundedReal series_tail_bound(long k, long g, const Int& det_two_m, const Int& D,
                              const Int& D_prime, long C, Prec prec) {
    if (k <= g + 3) throw WeightTooSmall("series_tail_bound: requires k > g + 3");
    if (C < 0) throw DomainError("series_tail_bound: C must be >= 0");
    const long s = k - g - 1;
    BoundedReal base = BoundedReal::pi(prec) *
                       (BoundedReal::from_int(D, prec) * BoundedReal::from_int(D_prime, prec))
                           .sqrt() /
                       BoundedReal::from_int(det_two_m, prec);
    BoundedReal power = base.pow_half(2 * k - g - 2) / gamma_half_integer(2 * k - g, prec);
    // sum_{c>C} c^(-s) <= C^(1-s)/(s-1) + C^(-s); at C = 0 prepend the c = 1 term
    BoundedReal cpart =
        BoundedReal::from_long(std::max(C, 1L), prec).pow_int(1 - s) /
            BoundedReal::from_long(s - 1, prec) +
        BoundedReal::from_long(std::max(C, 1L), prec).pow_int(-s);
    if (C == 0) cpart = cpart + BoundedReal::from_long(1, prec);
    return BoundedReal::from_int(2 * D, prec) * power * cpart;
}

BoundedReal tail_bound(long k, const HalfIntegralIndexMatrix& m, const Int& D,
                       const Int& D_prime, long C, Prec prec) {
    const long g = m.g();
    BoundedReal pref = BoundedReal::pi(prec) * BoundedReal::from_long(2, prec) *
                       BoundedReal::from_int(m.det_two_m(), prec).pow_half(-1);
    BoundedReal ratio = BoundedReal::from_int(D_prime, prec) / BoundedReal::from_int(D, prec);
    pref = pref * ratio.pow_quarter(2 * k - g - 2);
    return pref * series_tail_bound(k, g, m.det_two_m(), D, D_prime, C, prec);
}

namespace {

// sum over c = 1..c_max of (H pair)(c) * J_{k'}(2 pi sqrt(DD')/(det c))
BoundedComplex kloosterman_bessel_sum(long k, const HalfIntegralIndexMatrix& m,
                                      const JacobiIndex& from, const JacobiIndex& to,
                                      const Int& D, const Int& D_prime,
                                      const TruncationPlan& plan) {
    const Prec prec = plan.prec;
    const bool accel = m.g() == 1;
    BoundedReal arg_num = BoundedReal::pi(prec) * BoundedReal::from_long(2, prec) *
                          (BoundedReal::from_int(D, prec) * BoundedReal::from_int(D_prime, prec))
                              .sqrt() /
                          BoundedReal::from_int(m.det_two_m(), prec);
    BesselOrder order{2 * k - m.g() - 2};
    BoundedComplex sum(prec);
    for (long c = 1; c <= plan.c_max; ++c) {
        JacobiSumParams p{m, c, from.n, from.r, to.n, to.r};
        BoundedComplex pair = h_plusminus(p, k, prec, accel);
        BoundedReal x = arg_num / BoundedReal::from_long(c, prec);
        sum.add_assign(pair.scaled(bessel_j(order, x, prec)));
    }
    return sum;
}

}  // namespace

CoefficientValue coefficient(long k, const HalfIntegralIndexMatrix& m, const JacobiIndex& from,
                             const JacobiIndex& to, const TruncationPlan& plan) {
    const long g = m.g();
    if (static_cast<long>(from.r.size()) != g || static_cast<long>(to.r.size()) != g)
        throw DimensionMismatch("coefficient: index vectors must have length g");
    if (k <= g + 3) throw WeightTooSmall("coefficient: requires k > g + 3");
    const Int D = discriminant(from, m);
    const Int Dp = discriminant(to, m);
    if (D <= 0 || Dp <= 0)
        throw NonpositiveDiscriminant("coefficient: indices must have positive discriminant");
    const Prec prec = plan.prec;

    long delta = delta_m(from, to, m);
    long delta_neg = delta_m(from, negated_r(to), m);
    long delta_part = (k % 2 == 0) ? delta + delta_neg : delta - delta_neg;

    BoundedComplex series = kloosterman_bessel_sum(k, m, from, to, D, Dp, plan);
    BoundedReal pref = BoundedReal::pi(prec) * BoundedReal::from_long(2, prec) *
                       BoundedReal::from_int(m.det_two_m(), prec).pow_half(-1);
    BoundedReal ratio = BoundedReal::from_int(Dp, prec) / BoundedReal::from_int(D, prec);
    pref = pref * ratio.pow_quarter(2 * k - g - 2);
    BoundedComplex value = series.scaled(pref).times_i_power(k);
    value.add_assign(BoundedComplex::from_real(BoundedReal::from_long(delta_part, prec)));
    return {value, plan.c_max, tail_bound(k, m, D, Dp, plan.c_max, prec)};
}

SeriesValue s_series(long k, const HalfIntegralIndexMatrix& m, const JacobiIndex& idx,
                     const TruncationPlan& plan) {
    const long g = m.g();
    if (static_cast<long>(idx.r.size()) != g)
        throw DimensionMismatch("s_series: index vector must have length g");
    if (k <= g + 3) throw WeightTooSmall("s_series: requires k > g + 3");
    const Int D = discriminant(idx, m);
    if (D <= 0) throw NonpositiveDiscriminant("s_series: index must have positive discriminant");
    const Prec prec = plan.prec;
    BoundedReal scale = BoundedReal::from_int(m.det_two_m(), prec).pow_half(-1);
    BoundedComplex s = (plan.c_max >= 1)
                           ? kloosterman_bessel_sum(k, m, idx, idx, D, D, plan).scaled(scale)
                           : BoundedComplex(prec);
    BoundedReal tail = scale * series_tail_bound(k, g, m.det_two_m(), D, D, plan.c_max, prec);
    return {s, tail, plan.c_max};
}

std::vector<Rational> develop_d2nu(const CoefficientMap& coeffs, long k, long m, long nu,
                                   long n_max) {
    if (k % 2 != 0) throw OddWeight("develop_d2nu: k must be even");
    if (m < 1 || nu < 0 || nu > m) throw DomainError("develop_d2nu: need 1 <= m and 0 <= nu <= m");
    auto fact = [](long v) {
        Int f = 1;
        for (long i = 2; i <= v; ++i) f *= i;
        return f;
    };
    const Int top = fact(k + 2 * nu - 2);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n_max));
    for (long n = 1; n <= n_max; ++n) {
        Rational a = 0;
        for (long r = 0; r * r < 4 * m * n; r = (r <= 0 ? 1 - r : -r)) {
            // weight sum over mu
            Rational w = 0;
            for (long mu = 0; mu <= nu; ++mu) {
                Int num = fact(k + 2 * nu - mu - 2);
                Int mn = Int(-1) * m * n;
                Int mn_pow = 1;
                for (long i = 0; i < mu; ++i) mn_pow *= mn;
                Int r_pow = 1;
                for (long i = 0; i < 2 * (nu - mu); ++i) r_pow *= r;
                w += Rational(num * mn_pow * r_pow, top * fact(mu) * fact(2 * (nu - mu)));
            }
            auto it = coeffs.find({n, r});
            if (it == coeffs.end())
                throw MissingCoefficient("develop_d2nu: coefficient (" + std::to_string(n) +
                                         "," + std::to_string(r) + ") not supplied");
            a += w * it->second;
        }
        out.push_back(a);
    }
    return out;
}

std::vector<BoundedComplex> develop_d2nu_normalized(const CoefficientMap& coeffs, long k,
                                                    long m, long nu, long n_max, Prec prec) {
    const BoundedComplex a_const = develop_a_constant(k, nu, prec);
    std::vector<BoundedComplex> out;
    out.reserve(static_cast<size_t>(n_max));
    for (const Rational& a : develop_d2nu(coeffs, k, m, nu, n_max))
        out.push_back(a_const.scaled(BoundedReal::from_rational(a, prec)));
    return out;
}

BoundedComplex develop_a_constant(long k, long nu, Prec prec) {
    if (k % 2 != 0) throw OddWeight("develop_a_constant: k must be even");
    auto fact = [prec](long v) { return BoundedReal::factorial(static_cast<unsigned long>(v), prec); };
    BoundedReal mag = fact(k + 2 * nu - 2) * fact(2 * nu) / fact(k + nu - 2);
    BoundedReal two_pi_pow =
        (BoundedReal::pi(prec) * BoundedReal::from_long(2, prec)).pow_int(-nu);
    return BoundedComplex::from_real(mag * two_pi_pow).times_i_power(-nu);
}

}  // namespace jpcert
