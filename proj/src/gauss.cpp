#include "jpcert/gauss.hpp"

#include "jpcert/errors.hpp"

namespace jpcert {

namespace {

long to_long(const Int& v) {
    if (v > 1000000000L || v < -1000000000L)
        throw DomainError("modulus too large for dense summation");
    return v.convert_to<long>();
}

// index of e_c(t) in a mod-c table
size_t tidx(const Int& t, const Int& c) { return static_cast<size_t>(to_long(mod_reduce(t, c))); }

}  // namespace

BoundedComplex gauss_sum_direct(const GaussSumParams& p, Prec prec,
                                const std::vector<BoundedComplex>* table) {
    if (p.c < 1) throw DomainError("gauss_sum_direct: c must be >= 1");
    std::vector<BoundedComplex> local;
    if (table == nullptr) {
        local = unit_root_table(to_long(p.c), prec);
        table = &local;
    }
    const long c = to_long(p.c);
    const long a = to_long(mod_reduce(p.a, p.c));
    const long b = to_long(mod_reduce(p.b, p.c));
    ComplexAccumulator acc(prec);
    for (long n = 0; n < c; ++n) {
        long e = static_cast<long>(((__int128)a * n % c * n + (__int128)b * n) % c);
        acc.add_mid((*table)[static_cast<size_t>(e)]);
    }
    return acc.value_uniform(table_rad_bound(*table));
}

GaussClosed gauss_sum_closed(const GaussSumParams& p, Prec prec,
                             const std::vector<BoundedComplex>* table) {
    if (p.c < 1) throw DomainError("gauss_sum_closed: c must be >= 1");
    if (p.c == 1)
        return {BoundedComplex::from_real(BoundedReal::from_long(1, prec)), false};

    const Int a = mod_reduce(p.a, p.c);
    const Int b = mod_reduce(p.b, p.c);
    if (gcd_int(a, p.c) != 1)
        return {gauss_sum_direct(p, prec, table), true};

    const Int cm4 = mod_reduce(p.c, 4);
    if (cm4 == 1 || cm4 == 3) {
        // eps_c sqrt(c) (a|c) e_c(-psi(a) b^2),  4 a psi(a) == 1 (mod c)
        const Int psi = mod_inverse(4 * a, p.c).value;
        BoundedComplex phase = table != nullptr
                                   ? (*table)[tidx(-psi * b * b, p.c)]
                                   : BoundedComplex::unit_root(-psi * b * b, p.c, prec);
        BoundedComplex v = phase.times_i_power(epsilon_factor(p.c).i_power);
        v = v.scaled(BoundedReal::from_int(p.c, prec).sqrt());
        if (kronecker_symbol(a, p.c) < 0) v = -v;
        return {v, false};
    }
    if (cm4 == 2) {
        if (b % 2 == 1) {
            GaussClosed inner = gauss_sum_closed({2 * a, b, p.c / 2}, prec);
            return {inner.value.scaled(BoundedReal::from_long(2, prec)), inner.used_fallback};
        }
        if (b == 0) return {BoundedComplex(prec), false};
        return {gauss_sum_direct(p, prec, table), true};
    }
    // 4 | c
    if (b % 2 == 1) return {BoundedComplex(prec), false};
    if (b == 0) {
        // (1+i) eps_a^{-1} sqrt(c) (c|a)
        BoundedComplex v(BoundedReal::from_long(1, prec), BoundedReal::from_long(1, prec));
        v = v.times_i_power(-epsilon_factor(a).i_power);
        v = v.scaled(BoundedReal::from_int(p.c, prec).sqrt());
        if (kronecker_symbol(p.c, a) < 0) v = -v;
        return {v, false};
    }
    return {gauss_sum_direct(p, prec, table), true};
}

BoundedReal verify_gauss_multiplicativity(const Int& a, const Int& b, const Int& c1,
                                          const Int& c2, Prec prec) {
    if (gcd_int(c1, c2) != 1)
        throw NotCoprimeModuli("verify_gauss_multiplicativity: moduli must be coprime");
    BoundedComplex lhs = gauss_sum_direct({a, b, c1 * c2}, prec);
    BoundedComplex rhs =
        gauss_sum_direct({c2 * a, b, c1}, prec) * gauss_sum_direct({c1 * a, b, c2}, prec);
    return (lhs - rhs).abs_ball();
}

CycVec gauss_direct_exact(const GaussSumParams& p) {
    if (p.c < 1) throw DomainError("gauss_direct_exact: c must be >= 1");
    const long c = to_long(p.c);
    const long a = to_long(mod_reduce(p.a, p.c));
    const long b = to_long(mod_reduce(p.b, p.c));
    CycVec v(c);
    for (long n = 0; n < c; ++n)
        v.add_root(static_cast<long>(((__int128)a * n % c * n + (__int128)b * n) % c));
    return v;
}

CycVec epsilon_sqrt_exact(const Int& c_odd) {
    if (c_odd < 1 || c_odd % 2 == 0)
        throw DomainError("epsilon_sqrt_exact: argument must be odd and positive");
    // c = s^2 f with f squarefree; eps_c sqrt(c) = s * sum_n (n|f) zeta_f^n
    Int s = 1, f = 1, rest = c_odd;
    for (Int q = 3; q * q <= rest; q += 2) {
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= q;
        if (e % 2 == 1) f *= q;
    }
    if (rest > 1) f *= rest;
    const long fl = to_long(f);
    CycVec v(fl);
    if (fl == 1) {
        v.coeff[0] = s;
        return cyc_embed(v, to_long(c_odd));
    }
    for (long n = 1; n < fl; ++n) v.add_root(n, kronecker_symbol(n, f));
    return cyc_embed(cyc_scale(v, s), to_long(c_odd));
}

GaussClosedExact gauss_closed_exact(const GaussSumParams& p) {
    if (p.c < 1) throw DomainError("gauss_closed_exact: c must be >= 1");
    const long c = to_long(p.c);
    if (c == 1) {
        CycVec v(1);
        v.coeff[0] = 1;
        return {v, false};
    }
    const Int a = mod_reduce(p.a, p.c);
    const Int b = mod_reduce(p.b, p.c);
    if (gcd_int(a, p.c) != 1) return {gauss_direct_exact(p), true};

    const Int cm4 = mod_reduce(p.c, 4);
    if (cm4 == 1 || cm4 == 3) {
        const Int psi = mod_inverse(4 * a, p.c).value;
        CycVec v = epsilon_sqrt_exact(p.c);
        v = cyc_rotate(v, -to_long(mod_reduce(psi * b * b, p.c)));
        if (kronecker_symbol(a, p.c) < 0) v = cyc_neg(v);
        return {v, false};
    }
    if (cm4 == 2) {
        if (b % 2 == 1) {
            GaussClosedExact inner = gauss_closed_exact({2 * a, b, p.c / 2});
            return {cyc_scale(cyc_embed(inner.vec, c), 2), inner.used_fallback};
        }
        if (b == 0) return {CycVec(c), false};
        return {gauss_direct_exact(p), true};
    }
    // 4 | c
    if (b % 2 == 1) return {CycVec(c), false};
    if (b == 0) {
        // sqrt(c) = 2^(e/2) [sqrt(2)] sqrt(c_odd), assembled inside Z[zeta_c]
        Int codd = p.c;
        long e2 = 0;
        while (codd % 2 == 0) {
            codd /= 2;
            ++e2;
        }
        CycVec v = cyc_embed(epsilon_sqrt_exact(codd), c);          // eps sqrt(c_odd)
        v = cyc_rotate(v, -(epsilon_factor(codd).i_power) * (c / 4));  // divide by eps_codd
        Int pow2 = Int(1) << (e2 / 2);
        v = cyc_scale(v, pow2);
        if (e2 % 2 == 1) {
            // sqrt(2) = zeta_8 + zeta_8^{-1}; e2 odd >= 3 so 8 | c
            CycVec root2(c);
            root2.add_root(c / 8);
            root2.add_root(-(c / 8));
            v = cyc_mul(v, root2);
        }
        // (1 + i) eps_a^{-1} (c|a)
        CycVec w = cyc_add(v, cyc_rotate(v, c / 4));
        w = cyc_rotate(w, -(epsilon_factor(a).i_power) * (c / 4));
        if (kronecker_symbol(p.c, a) < 0) w = cyc_neg(w);
        return {w, false};
    }
    return {gauss_direct_exact(p), true};
}

namespace {

// G(a, b, 2^e) for odd a, closed form by completing the square on the even-b
// branch; the odd-b branch is zero for e >= 2.
BoundedComplex pow2_gauss(const Int& a, const Int& b, long e, Prec prec) {
    if (e == 0) return BoundedComplex::from_real(BoundedReal::from_long(1, prec));
    if (e == 1) {
        long v = (mod_reduce(a + b, 2) == 0) ? 2 : 0;
        return BoundedComplex::from_real(BoundedReal::from_long(v, prec));
    }
    const Int c = Int(1) << static_cast<unsigned>(e);
    if (b % 2 != 0) return BoundedComplex(prec);
    // G(a, 2b', 2^e) = e_{2^e}(-abar b'^2) G(a, 0, 2^e)
    const Int abar = mod_inverse(a, c).value;
    const Int bp = mod_reduce(b, c) / 2;
    BoundedComplex phase = BoundedComplex::unit_root(-abar * bp * bp, c, prec);
    BoundedComplex base(BoundedReal::from_long(1, prec), BoundedReal::from_long(1, prec));
    base = base.times_i_power(-epsilon_factor(a).i_power)
               .scaled(BoundedReal::from_int(c, prec).sqrt());
    if (kronecker_symbol(c, a) < 0) base = -base;
    return phase * base;
}

}  // namespace

BoundedComplex quad_gauss_any(const Int& a, const Int& b, const Int& c, Prec prec) {
    if (c < 1) throw DomainError("quad_gauss_any: c must be >= 1");
    if (c == 1) return BoundedComplex::from_real(BoundedReal::from_long(1, prec));
    const Int A = mod_reduce(a, c);
    const Int B = mod_reduce(b, c);
    if (A == 0) {
        if (B == 0) return BoundedComplex::from_real(BoundedReal::from_int(c, prec));
        return BoundedComplex(prec);
    }
    const Int d = gcd_int(A, c);
    if (d > 1) {
        if (B % d != 0) return BoundedComplex(prec);
        return quad_gauss_any(A / d, B / d, c / d, prec)
            .scaled(BoundedReal::from_int(d, prec));
    }
    if (c % 2 != 0) return gauss_sum_closed({A, B, c}, prec).value;
    // split off the 2-part so no branch needs direct summation
    Int codd = c;
    long e = 0;
    while (codd % 2 == 0) {
        codd /= 2;
        ++e;
    }
    BoundedComplex even_part = pow2_gauss(mod_reduce(codd * A, Int(1) << static_cast<unsigned>(e)),
                                          B, e, prec);
    BoundedComplex odd_part = gauss_sum_closed({(Int(1) << static_cast<unsigned>(e)) * A, B, codd},
                                               prec)
                                  .value;
    return even_part * odd_part;
}

}  // namespace jpcert
