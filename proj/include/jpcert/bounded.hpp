// Error-tracked high-precision arithmetic: a BoundedReal is a midpoint at a
// chosen working precision together with a non-negative error radius that is
// a true bound on the distance to the represented real number.  Radii are
// kept at a small fixed precision and always rounded up, so every operation
// is rigorous.  BoundedComplex is the componentwise complex version.
//
// MPFR supplies correctly rounded midpoint operations; each operation adds
// one ulp of the result to the radius on top of first-order propagation of
// the input radii.
#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "jpcert/arith.hpp"
#include "jpcert/errors.hpp"

namespace jpcert {

using Prec = mpfr_prec_t;
inline constexpr Prec kDefaultPrec = 128;
inline constexpr Prec kRadPrec = 32;

class BoundedReal {
  public:
    explicit BoundedReal(Prec prec = kDefaultPrec);
    BoundedReal(const BoundedReal& o);
    BoundedReal(BoundedReal&& o) noexcept;
    BoundedReal& operator=(const BoundedReal& o);
    BoundedReal& operator=(BoundedReal&& o) noexcept;
    ~BoundedReal();

    static BoundedReal from_long(long v, Prec prec = kDefaultPrec);
    static BoundedReal from_int(const Int& v, Prec prec = kDefaultPrec);
    static BoundedReal from_rational(const Rational& q, Prec prec = kDefaultPrec);
    static BoundedReal from_double(double v, Prec prec = kDefaultPrec);
    static BoundedReal pi(Prec prec = kDefaultPrec);
    // Ball covering the interval [inf(lo), sup(hi)].
    static BoundedReal from_endpoints(const BoundedReal& lo, const BoundedReal& hi);
    // Exact factorial n! up to one ulp.
    static BoundedReal factorial(unsigned long n, Prec prec);

    Prec precision() const { return prec_; }

    double mid_double() const;
    double rad_double() const;
    std::string mid_string(int digits = 25) const;
    std::string rad_string(int digits = 3) const;

    bool is_rad_zero() const;
    bool definitely_positive() const;  // inf > 0
    bool definitely_negative() const;  // sup < 0
    bool contains_zero() const;

    BoundedReal upper() const;      // exact number >= sup of the ball
    BoundedReal lower() const;      // exact number <= inf of the ball
    BoundedReal abs_upper() const;  // exact number >= |x| for every x in ball
    BoundedReal abs_lower() const;  // exact number <= |x|, clamped at 0

    bool certainly_less(const BoundedReal& o) const;
    bool certainly_leq(const BoundedReal& o) const;

    BoundedReal operator-() const;
    BoundedReal abs() const;
    friend BoundedReal operator+(const BoundedReal& a, const BoundedReal& b);
    friend BoundedReal operator-(const BoundedReal& a, const BoundedReal& b);
    friend BoundedReal operator*(const BoundedReal& a, const BoundedReal& b);
    friend BoundedReal operator/(const BoundedReal& a, const BoundedReal& b);
    void add_assign(const BoundedReal& o);

    BoundedReal sqrt() const;  // domain must allow x >= 0 up to radius
    BoundedReal exp() const;
    BoundedReal log() const;   // requires inf > 0
    BoundedReal sin() const;
    BoundedReal cos() const;
    BoundedReal pow_int(long e) const;
    BoundedReal pow_half(long num) const;     // x^(num/2), x >= 0
    BoundedReal pow_quarter(long num) const;  // x^(num/4), x >= 0
    BoundedReal pow(const BoundedReal& y) const;  // requires inf > 0

    // Enlarge the radius by sup(|extra|); used to fold tail bounds in.
    void widen_by(const BoundedReal& extra);

    mpfr_srcptr mid_raw() const { return mid_; }
    mpfr_srcptr rad_raw() const { return rad_; }
    mpfr_ptr mid_raw() { return mid_; }
    mpfr_ptr rad_raw() { return rad_; }

  private:
    friend class BoundedComplex;
    friend class ComplexAccumulator;
    mpfr_t mid_;
    mpfr_t rad_;
    Prec prec_;
    void bump_rad_ulp(int ternary);
};

// min of two balls as a ball (interval hull of pointwise min).
BoundedReal min_ball(const BoundedReal& a, const BoundedReal& b);

class BoundedComplex {
  public:
    explicit BoundedComplex(Prec prec = kDefaultPrec);
    BoundedComplex(BoundedReal re, BoundedReal im);

    static BoundedComplex from_real(const BoundedReal& re);
    // e(num/den) = exp(2 pi i num / den), den >= 1.
    static BoundedComplex unit_root(const Int& num, const Int& den, Prec prec);
    static BoundedComplex unit_rational(const Rational& q, Prec prec);

    const BoundedReal& real() const { return re_; }
    const BoundedReal& imag() const { return im_; }
    Prec precision() const { return re_.precision(); }

    BoundedComplex operator-() const;
    BoundedComplex conj() const;
    friend BoundedComplex operator+(const BoundedComplex& a, const BoundedComplex& b);
    friend BoundedComplex operator-(const BoundedComplex& a, const BoundedComplex& b);
    friend BoundedComplex operator*(const BoundedComplex& a, const BoundedComplex& b);
    friend BoundedComplex operator/(const BoundedComplex& a, const BoundedComplex& b);
    BoundedComplex scaled(const BoundedReal& s) const;
    void add_assign(const BoundedComplex& o);
    // Exact multiplication by i^k (component swap and sign only).
    BoundedComplex times_i_power(long k) const;

    BoundedReal abs_ball() const;   // ball containing |z|
    BoundedReal abs_upper() const;  // exact upper bound for |z|

    std::string to_string(int digits = 20) const;

  private:
    friend class ComplexAccumulator;
    BoundedReal re_, im_;
};

// Accumulator for long sums of complex terms.  Midpoints accumulate with
// round-to-nearest; the accumulated rounding error is bounded at the end by
// (number of terms) * 2^(max result exponent - precision), and the term
// radii are accumulated upward as they come.
class ComplexAccumulator {
  public:
    explicit ComplexAccumulator(Prec prec);
    ~ComplexAccumulator();
    ComplexAccumulator(const ComplexAccumulator&) = delete;
    ComplexAccumulator& operator=(const ComplexAccumulator&) = delete;

    void add(const BoundedComplex& term);
    void sub(const BoundedComplex& term);
    // term * i^k * sign without forming temporaries
    void add_rotated(const BoundedComplex& term, long i_power, int sign);
    BoundedComplex value() const;

    // Fast path for sums whose terms share one radius bound (table lookups):
    // midpoints only, with count * (term_rad + roundoff) folded in at the end.
    void add_mid(const BoundedComplex& term);
    BoundedComplex value_uniform(const BoundedReal& term_rad) const;

  private:
    void track(int tr, int ti);
    mpfr_t re_, im_;
    mpfr_t rad_re_, rad_im_;
    mpfr_exp_t emax_re_, emax_im_;
    unsigned long count_;
    Prec prec_;
};

// Table of e(t/n) for t = 0..n-1 at the given precision.
std::vector<BoundedComplex> unit_root_table(long n, Prec prec);

// Upper bound for the componentwise radii over a table.
BoundedReal table_rad_bound(const std::vector<BoundedComplex>& table);

}  // namespace jpcert
