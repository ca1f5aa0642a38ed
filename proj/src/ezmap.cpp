#include "jpcert/ezmap.hpp"

#include <cmath>

#include "jpcert/errors.hpp"

namespace jpcert {

Int ez_relabel(const Int& n, const Int& r) {
    Int d = 4 * n - r * r;
    if (d <= 0) throw NonpositiveDiscriminant("ez_relabel: 4n - r^2 must be positive");
    return d;
}

GdValue kohnen_gd(long k, const Int& D, const Int& t, const TruncationPlan& plan,
                  HalfIntegralConvention conv) {
    if (k % 2 != 0) throw OddWeight("kohnen_gd: k must be even");
    if (k < 6) throw WeightTooSmall("kohnen_gd: requires even k >= 6");
    for (const Int* v : {&D, &t}) {
        if (*v < 1) throw BadResidueClass("kohnen_gd: D, t must be positive");
        Int m4 = mod_reduce(*v, 4);
        if (m4 != 0 && m4 != 3) throw BadResidueClass("kohnen_gd: D, t must be 0 or 3 mod 4");
    }
    const Prec prec = plan.prec;
    const BesselOrder order{2 * k - 3};
    BoundedReal sqrt_td =
        (BoundedReal::from_int(t, prec) * BoundedReal::from_int(D, prec)).sqrt();
    BoundedReal arg_num = BoundedReal::pi(prec) * sqrt_td;

    BoundedComplex series(prec);
    for (long c = 1; c <= plan.c_max; ++c) {
        BoundedComplex hc = h_kohnen({k - 1, c, t, D}, prec, conv);
        BoundedReal x = arg_num / BoundedReal::from_long(c, prec);
        series.add_assign(hc.scaled(bessel_j(order, x, prec)));
    }

    // prefactor (2/3) (-1)^(k/2) pi sqrt(2) (t/D)^(k/2 - 3/4)
    BoundedReal ratio_pow = (BoundedReal::from_int(t, prec) / BoundedReal::from_int(D, prec))
                                .pow_quarter(2 * k - 3);
    BoundedReal pref = BoundedReal::pi(prec) * BoundedReal::from_long(2, prec).sqrt() *
                       ratio_pow * BoundedReal::from_rational(Rational(2, 3), prec);
    long sign = (k / 2) % 2 == 0 ? 1 : -1;

    BoundedComplex value = series.scaled(pref * BoundedReal::from_long(sign, prec));
    if (D == t)
        value.add_assign(BoundedComplex::from_real(
            BoundedReal::from_rational(Rational(2, 3), prec)));

    // tail: |H_c| <= 2 sqrt(2) and |J_nu(x)| <= (x/2)^nu / Gamma(nu+1), nu = k - 3/2
    const long s2 = 2 * k - 3;  // 2 * s' with s' = k - 3/2
    BoundedReal power = (arg_num * BoundedReal::from_rational(Rational(1, 2), prec))
                            .pow_half(s2) /
                        gamma_half_integer(2 * k - 1, prec);
    BoundedReal cb = BoundedReal::from_long(std::max(plan.c_max, 1L), prec);
    BoundedReal cpart = cb.pow_half(2 - s2) * BoundedReal::from_rational(Rational(2, s2 - 2), prec) +
                        cb.pow_half(-s2);
    if (plan.c_max < 1) cpart = cpart + BoundedReal::from_long(1, prec);
    BoundedReal tail = pref * BoundedReal::from_long(2, prec) *
                       BoundedReal::from_long(2, prec).sqrt() * power * cpart;
    return {value, tail, plan.c_max};
}

J2HReport verify_j2h(long k, const Int& n, const Int& r,
                     const std::vector<std::pair<Int, Int>>& targets,
                     const TruncationPlan& plan, HalfIntegralConvention conv) {
    if (k % 2 != 0) throw OddWeight("verify_j2h: k must be even");
    if (k < 8) throw WeightTooSmall("verify_j2h: requires even k >= 8");
    const Int D = ez_relabel(n, r);
    const Prec prec = plan.prec;
    HalfIntegralIndexMatrix m1 = HalfIntegralIndexMatrix::from_scalar_index(1);
    JacobiIndex from{n, {r}};

    auto widen = [](const BoundedComplex& z, const BoundedReal& t) {
        BoundedReal re = z.real(), im = z.imag();
        re.widen_by(t);
        im.widen_by(t);
        return BoundedComplex(re, im);
    };

    J2HReport rep;
    for (const auto& [np, rp] : targets) {
        J2HEntry e;
        e.n_prime = np;
        e.r_prime = rp;
        e.d_prime = ez_relabel(np, rp);
        CoefficientValue cv = coefficient(k, m1, from, JacobiIndex{np, {rp}}, plan);
        GdValue gd = kohnen_gd(k, D, e.d_prime, plan, conv);
        e.jacobi_coeff = widen(cv.value, cv.tail_bound);
        e.gd = widen(gd.value, gd.tail);
        if (e.gd.abs_ball().definitely_positive()) {
            e.ratio_defined = true;
            e.ratio = e.jacobi_coeff / e.gd;
        }
        rep.entries.push_back(std::move(e));
    }

    BoundedComplex sum(prec);
    long count = 0;
    for (const auto& e : rep.entries)
        if (e.ratio_defined) {
            sum.add_assign(e.ratio);
            ++count;
        }
    if (count == 0) return rep;
    rep.kappa_defined = true;
    rep.kappa = sum.scaled(BoundedReal::from_long(1, prec) / BoundedReal::from_long(count, prec));
    double kabs = rep.kappa.abs_ball().mid_double();
    for (const auto& e : rep.entries)
        if (e.ratio_defined) {
            double dev = (e.ratio - rep.kappa).abs_ball().mid_double() / kabs;
            rep.max_rel_spread = std::max(rep.max_rel_spread, dev);
        }
    return rep;
}

}  // namespace jpcert
