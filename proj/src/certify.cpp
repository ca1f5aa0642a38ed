#include "jpcert/certify.hpp"

#include <cmath>

#include "jpcert/errors.hpp"

namespace jpcert {

namespace {

BoundedReal inv_two_pi(Prec prec) {
    return BoundedReal::from_long(1, prec) /
           (BoundedReal::pi(prec) * BoundedReal::from_long(2, prec));
}

void require_constant_above(double value, double twice_log2_multiple, const char* what) {
    // floors are multiples of log 2; compare rigorously at 64 bits
    BoundedReal floor_val = BoundedReal::from_long(2, 64).log() *
                            BoundedReal::from_double(twice_log2_multiple, 64);
    if (!floor_val.certainly_less(BoundedReal::from_double(value, 64)))
        throw InvalidConstant(std::string(what) + ": constant below its floor");
}

}  // namespace

bool trivial_vanishing(long k, const HalfIntegralIndexMatrix& m, const std::vector<Int>& r) {
    return (k % 2 != 0) && two_r_congruent_zero(r, m);
}

Certificate certify_nonvanishing(long k, const HalfIntegralIndexMatrix& m,
                                 const JacobiIndex& idx, std::optional<TruncationPlan> plan) {
    const long g = m.g();
    if (k <= g + 3) throw WeightTooSmall("certify_nonvanishing: requires k > g + 3");
    const Int D = discriminant(idx, m);
    if (D <= 0)
        throw NonpositiveDiscriminant("certify_nonvanishing: index must have D > 0");

    if (trivial_vanishing(k, m, idx.r)) {
        Prec prec = plan ? plan->prec : kDefaultPrec;
        return {CertStatus::VanishesExactly, BoundedReal(prec), BoundedReal(prec),
                inv_two_pi(prec), plan ? *plan : TruncationPlan{0, prec}};
    }

    TruncationPlan current = plan ? *plan : TruncationPlan::defaults_for(D, m.det_two_m());
    for (int attempt = 0;; ++attempt) {
        SeriesValue sv = s_series(k, m, idx, current);
        BoundedReal s_abs = sv.s.abs_ball();
        BoundedReal total = s_abs + sv.tail;
        BoundedReal threshold = inv_two_pi(current.prec);
        BoundedReal margin = threshold - total;
        if (total.certainly_less(threshold))
            return {CertStatus::CertifiedNonzero, s_abs, sv.tail, margin, current};
        // |S| is certainly above the threshold already: no plan can certify
        BoundedReal s_low = s_abs.lower() - sv.tail.upper();
        if (threshold.certainly_less(s_low))
            return {CertStatus::Inconclusive, s_abs, sv.tail, margin, current};
        if (attempt >= 3)
            return {CertStatus::Inconclusive, s_abs, sv.tail, margin, current};
        current = current.escalated();
    }
}

long default_k0(long g) { return std::max(g + 4, g / 2 + 69); }

RegionReport region_linear_weight(long k, long g, const Int& det_two_m, const Int& D,
                                 std::optional<long> k0) {
    const Prec prec = kDefaultPrec;
    RegionReport rep;
    rep.k0_used = k0 ? *k0 : default_k0(g);
    // pi e D <= k' det(2m)
    rep.lhs = BoundedReal::pi(prec) * BoundedReal::from_long(1, prec).exp() *
              BoundedReal::from_int(D, prec);
    rep.rhs = BoundedReal::from_rational(Rational(2 * k - g - 2, 2), prec) *
              BoundedReal::from_int(det_two_m, prec);
    rep.in_region = (k >= rep.k0_used) && rep.lhs.certainly_leq(rep.rhs);
    return rep;
}

RegionReport region_small_discriminant(long g, const Int& det_two_m, const Int& D, long k) {
    const Prec prec = kDefaultPrec;
    RegionReport rep;
    rep.lhs = BoundedReal::pi(prec) * BoundedReal::from_int(D, prec);
    rep.rhs = BoundedReal::from_int(det_two_m, prec);
    const bool weight_ok = (g == 1) ? (k > 5) : (k > g + 3);
    rep.in_region = weight_ok && rep.lhs.certainly_less(rep.rhs);
    return rep;
}

bool region_nonvoid(const Int& m, const Int& n) {
    if (m < 1 || n < 1) throw DomainError("region_nonvoid: needs m >= 1 and n >= 1");
    // n < 1/6 + (2m-3)^2 / (144 m), exactly
    Rational bound = Rational(1, 6) + Rational((2 * m - 3) * (2 * m - 3), 144 * m);
    return Rational(n) < bound;
}

std::optional<Int> nonvoid_witness(const Int& m, const Int& n) {
    // 2m(2n - 1/3) < r^2 < 4mn  <=>  2m(6n-1) < 3 r^2  and  r^2 < 4mn
    for (Int r = 1; r * r < 4 * m * n; ++r)
        if (3 * r * r > 2 * m * (6 * n - 1)) return r;
    return std::nullopt;
}

BoundedReal m_factor(const BoundedReal& x, double B1) {
    require_constant_above(B1, 1.0, "m_factor B1");
    const Prec prec = x.precision();
    if (!BoundedReal::from_long(2, prec).certainly_leq(x))
        throw DomainError("m_factor: requires x >= 2");
    BoundedReal log2x = (x * BoundedReal::from_long(2, prec)).log();
    return (BoundedReal::from_double(B1, prec) * x.log() / log2x.log()).exp();
}

Rational power_window_alpha(long g, bool proof_variant) {
    if (g < 1) throw DomainError("power_window_alpha: g >= 1");
    if (proof_variant) return Rational(2, 3 * g + 2);
    if (g <= 4) return Rational(2, 3 * (g + 2));
    return Rational(2, 3 * g);
}

RegionReport region_power_window(long k, long g, const Int& det_two_m, const Int& D, double B,
                          std::optional<long> k0, bool proof_variant) {
    require_constant_above(B, 3.0, "region_power_window B");
    const Prec prec = kDefaultPrec;
    RegionReport rep;
    rep.B_used = B;
    rep.k0_used = k0 ? *k0 : default_k0(g);
    BoundedReal kp = BoundedReal::from_rational(Rational(2 * k - g - 2, 2), prec);
    BoundedReal ratio = BoundedReal::pi(prec) * BoundedReal::from_int(D, prec) /
                        BoundedReal::from_int(det_two_m, prec);
    rep.lhs = ratio;
    bool lower_ok = kp.certainly_leq(ratio);
    bool upper_ok = false;
    if (kp.lower().mid_double() > 2.72) {  // log log k' must be positive
        BoundedReal logk = kp.log();
        BoundedReal damp = (-(BoundedReal::from_double(B, prec) * logk / logk.log())).exp();
        BoundedReal alpha = BoundedReal::from_rational(power_window_alpha(g, proof_variant), prec);
        BoundedReal kpow = kp.pow(BoundedReal::from_long(1, prec) + alpha);
        rep.rhs = kpow * damp;
        upper_ok = ratio.certainly_leq(rep.rhs);
    }
    rep.in_region = (k >= rep.k0_used) && lower_ok && upper_ok;
    return rep;
}

RegionReport region_weight_free(const Int& m, const Int& D, double B1) {
    require_constant_above(B1, 1.0, "region_weight_free B1");
    const Prec prec = kDefaultPrec;
    RegionReport rep;
    rep.B1_used = B1;
    BoundedReal pi_d = BoundedReal::pi(prec) * BoundedReal::from_int(D, prec);
    if (!BoundedReal::from_int(m, prec).certainly_less(pi_d)) {
        rep.applicable = false;  // hypothesis D > m/pi fails
        return rep;
    }
    // the hypothesis only gives pi D/m > 1; M is used from 2 up, and M is
    // increasing, so clamping the argument to 2 can only enlarge the left side
    BoundedReal x = pi_d / BoundedReal::from_int(m, prec);
    if (!BoundedReal::from_long(2, prec).certainly_leq(x))
        x = BoundedReal::from_long(2, prec);
    BoundedReal sigma0 = BoundedReal::from_long(divisor_stats(D).sigma0, prec);
    rep.lhs = m_factor(x, B1) * sigma0 * BoundedReal::from_int(D, prec);
    // lambda = (2 sqrt(2) pi^(5/3) A)^(3/2)
    BoundedReal lam = (BoundedReal::from_long(2, prec) * BoundedReal::from_long(2, prec).sqrt() *
                       BoundedReal::pi(prec).pow(BoundedReal::from_rational(Rational(5, 3), prec)) *
                       bessel_amplitude_constant(prec))
                          .pow_half(3);
    rep.rhs = BoundedReal::from_int(m, prec)
                  .pow(BoundedReal::from_rational(Rational(8, 7), prec)) /
              lam;
    rep.in_region = rep.lhs.certainly_less(rep.rhs);
    return rep;
}

RegionReport region_half_integral(long k, const Int& D, double B, std::optional<long> k0) {
    if (k % 2 != 0) throw OddWeight("region_half_integral: k must be even");
    require_constant_above(B, 4.0, "region_half_integral B");
    const Prec prec = kDefaultPrec;
    RegionReport rep;
    rep.B_used = B;
    rep.k0_used = k0 ? *k0 : default_k0(1);
    rep.lhs = BoundedReal::from_int(D, prec);
    bool upper_ok = false;
    if (k >= 3) {
        BoundedReal kk = BoundedReal::from_long(k, prec);
        BoundedReal damp = (-(BoundedReal::from_double(B, prec) * kk.log() / kk.log().log())).exp();
        rep.rhs = kk * kk * damp;
        upper_ok = rep.lhs.certainly_leq(rep.rhs);
    }
    rep.in_region = (k >= rep.k0_used) && upper_ok;
    return rep;
}

ConsecutiveFit verify_consecutive(long k, const Int& p, long mu,
                                  const HalfIntegralIndexMatrix& m0,
                                  const std::vector<JacobiIndex>& samples,
                                  std::optional<TruncationPlan> plan) {
    std::string why;
    if (p < 3 || p % 2 == 0) why += " p must be an odd prime;";
    for (Int q = 3; q * q <= p; q += 2)
        if (p % q == 0) { why += " p must be prime;"; break; }
    if (mu < 1) why += " mu must be >= 1;";
    for (const Int& e : m0.two_m_entries())
        if (e % p != 0) { why += " p | m0 fails;"; break; }
    for (const JacobiIndex& s : samples) {
        if (s.n % p == 0) why += " p !| n fails;";
        for (const Int& e : s.r)
            if (e % p != 0) { why += " p | r fails;"; break; }
    }
    if (samples.size() < 2) why += " need at least two samples;";
    if (!why.empty()) throw PreconditionViolated("verify_consecutive:" + why);

    Int pmu = 1;
    for (long i = 0; i < mu; ++i) pmu *= p;
    const HalfIntegralIndexMatrix mA = m0.scaled(pmu);
    const HalfIntegralIndexMatrix mB = m0.scaled(pmu * pmu);
    const HalfIntegralIndexMatrix mC = m0.scaled(pmu / p);
    const Prec prec = plan ? plan->prec : kDefaultPrec;

    auto scaled_index = [](const JacobiIndex& s, const Int& f) {
        JacobiIndex out{s.n * f, s.r};
        for (Int& v : out.r) v *= f;
        return out;
    };

    std::vector<BoundedComplex> cA, cB, cC;
    for (const JacobiIndex& s : samples) {
        JacobiIndex iA = scaled_index(s, pmu);
        JacobiIndex iB_from = scaled_index(s, pmu * pmu);
        JacobiIndex iB_to{s.n, iA.r};
        JacobiIndex iC = scaled_index(s, pmu / p);

        auto plan_for = [&](const HalfIntegralIndexMatrix& m, const JacobiIndex& from) {
            if (plan) return *plan;
            return TruncationPlan::defaults_for(discriminant(from, m), m.det_two_m());
        };
        CoefficientValue a = coefficient(k, mA, iA, iA, plan_for(mA, iA));
        CoefficientValue b = coefficient(k, mB, iB_from, iB_to, plan_for(mB, iB_from));
        CoefficientValue c = coefficient(k, mC, iC, iC, plan_for(mC, iC));
        // fold tails into the radii so the fit sees total uncertainty
        auto widened = [](const CoefficientValue& v) {
            BoundedReal re = v.value.real(), im = v.value.imag();
            re.widen_by(v.tail_bound);
            im.widen_by(v.tail_bound);
            return BoundedComplex(re, im);
        };
        cA.push_back(widened(a));
        cB.push_back(widened(b));
        cC.push_back(widened(c));
    }

    // least squares for (a1, a2): normal equations of sum |A - a1 B - a2 C|^2
    auto zero = [&] { return BoundedComplex(prec); };
    BoundedComplex sBB = zero(), sBC = zero(), sCC = zero(), sBA = zero(), sCA = zero();
    for (size_t i = 0; i < samples.size(); ++i) {
        sBB.add_assign(cB[i].conj() * cB[i]);
        sBC.add_assign(cB[i].conj() * cC[i]);
        sCC.add_assign(cC[i].conj() * cC[i]);
        sBA.add_assign(cB[i].conj() * cA[i]);
        sCA.add_assign(cC[i].conj() * cA[i]);
    }
    BoundedComplex det = sBB * sCC - sBC * sBC.conj();
    ConsecutiveFit fit;
    fit.alpha1 = (sBA * sCC - sCA * sBC) / det;
    fit.alpha2 = (sBB * sCA - sBC.conj() * sBA) / det;

    fit.residuals_ok = true;
    for (size_t i = 0; i < samples.size(); ++i) {
        BoundedComplex r = cA[i] - fit.alpha1 * cB[i] - fit.alpha2 * cC[i];
        BoundedReal res = r.abs_ball();
        // the values' own uncertainty, amplified by the fitted constants
        auto width = [](const BoundedComplex& z) {
            return (z.real().upper() - z.real().lower()) + (z.imag().upper() - z.imag().lower());
        };
        BoundedReal budget = width(cA[i]) + fit.alpha1.abs_upper() * width(cB[i]) +
                             fit.alpha2.abs_upper() * width(cC[i]);
        fit.residuals.push_back(res);
        fit.budgets.push_back(budget);
        if (!res.lower().certainly_leq(budget.upper())) fit.residuals_ok = false;
    }
    fit.alphas_positive = fit.alpha1.real().definitely_positive() &&
                          fit.alpha2.real().definitely_positive();
    return fit;
}

}  // namespace jpcert
