#include "jpcert/bounded.hpp"

#include <algorithm>
#include <cstdio>

namespace jpcert {

namespace {

// Set rop (at kRadPrec) to an upper bound of |x|.
void abs_up(mpfr_t rop, mpfr_srcptr x) {
    mpfr_abs(rop, x, MPFR_RNDU);
}

void int_to_mpfr(mpfr_t rop, const Int& v, mpfr_rnd_t rnd, int* ternary) {
    const std::string s = v.str();
    *ternary = mpfr_set_str(rop, s.c_str(), 10, rnd);
}

}  // namespace

BoundedReal::BoundedReal(Prec prec) : prec_(prec) {
    mpfr_init2(mid_, prec_);
    mpfr_set_zero(mid_, 1);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(rad_, 1);
}

BoundedReal::BoundedReal(const BoundedReal& o) : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

BoundedReal::BoundedReal(BoundedReal&& o) noexcept : prec_(o.prec_) {
    mid_[0] = o.mid_[0];
    rad_[0] = o.rad_[0];
    mpfr_init2(o.mid_, 2);
    mpfr_init2(o.rad_, 2);
    mpfr_set_zero(o.mid_, 1);
    mpfr_set_zero(o.rad_, 1);
}

BoundedReal& BoundedReal::operator=(const BoundedReal& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        mpfr_set_prec(mid_, o.prec_);
        prec_ = o.prec_;
    }
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
    return *this;
}

BoundedReal& BoundedReal::operator=(BoundedReal&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
    std::swap(prec_, o.prec_);
    return *this;
}

BoundedReal::~BoundedReal() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void BoundedReal::bump_rad_ulp(int ternary) {
    if (ternary == 0) return;
    mpfr_t u;
    mpfr_init2(u, kRadPrec);
    if (mpfr_zero_p(mid_) || !mpfr_regular_p(mid_)) {
        mpfr_set_ui_2exp(u, 1, mpfr_get_emin(), MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    }
    mpfr_add(rad_, rad_, u, MPFR_RNDU);
    mpfr_clear(u);
}

BoundedReal BoundedReal::from_long(long v, Prec prec) {
    BoundedReal r(prec);
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::from_int(const Int& v, Prec prec) {
    BoundedReal r(prec);
    int t;
    int_to_mpfr(r.mid_, v, MPFR_RNDN, &t);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::from_rational(const Rational& q, Prec prec) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return from_int(num, prec);
    return from_int(num, prec) / from_int(den, prec);
}

BoundedReal BoundedReal::from_double(double v, Prec prec) {
    BoundedReal r(prec);
    int t = mpfr_set_d(r.mid_, v, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::pi(Prec prec) {
    BoundedReal r(prec);
    int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::from_endpoints(const BoundedReal& lo, const BoundedReal& hi) {
    Prec prec = std::max(lo.prec_, hi.prec_);
    mpfr_t inf, sup;
    mpfr_init2(inf, prec);
    mpfr_init2(sup, prec);
    mpfr_sub(inf, lo.mid_, lo.rad_, MPFR_RNDD);
    mpfr_add(sup, hi.mid_, hi.rad_, MPFR_RNDU);
    BoundedReal r(prec);
    mpfr_add(r.mid_, inf, sup, MPFR_RNDN);
    mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
    mpfr_t d1, d2;
    mpfr_init2(d1, kRadPrec);
    mpfr_init2(d2, kRadPrec);
    mpfr_sub(d1, sup, r.mid_, MPFR_RNDU);
    mpfr_sub(d2, r.mid_, inf, MPFR_RNDU);
    mpfr_max(r.rad_, d1, d2, MPFR_RNDU);
    if (mpfr_sgn(r.rad_) < 0) mpfr_set_zero(r.rad_, 1);
    r.bump_rad_ulp(1);
    mpfr_clears(inf, sup, d1, d2, nullptr);
    return r;
}

BoundedReal BoundedReal::factorial(unsigned long n, Prec prec) {
    BoundedReal r(prec);
    int t = mpfr_fac_ui(r.mid_, n, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

double BoundedReal::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double BoundedReal::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

std::string BoundedReal::mid_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BoundedReal::rad_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, rad_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

bool BoundedReal::is_rad_zero() const { return mpfr_zero_p(rad_); }

bool BoundedReal::definitely_positive() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sub(t, mid_, rad_, MPFR_RNDD);
    bool ok = mpfr_sgn(t) > 0;
    mpfr_clear(t);
    return ok;
}

bool BoundedReal::definitely_negative() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_add(t, mid_, rad_, MPFR_RNDU);
    bool ok = mpfr_sgn(t) < 0;
    mpfr_clear(t);
    return ok;
}

bool BoundedReal::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

BoundedReal BoundedReal::upper() const {
    BoundedReal r(prec_);
    mpfr_add(r.mid_, mid_, rad_, MPFR_RNDU);
    return r;
}

BoundedReal BoundedReal::lower() const {
    BoundedReal r(prec_);
    mpfr_sub(r.mid_, mid_, rad_, MPFR_RNDD);
    return r;
}

BoundedReal BoundedReal::abs_upper() const {
    BoundedReal r(prec_);
    mpfr_abs(r.mid_, mid_, MPFR_RNDU);
    mpfr_add(r.mid_, r.mid_, rad_, MPFR_RNDU);
    return r;
}

BoundedReal BoundedReal::abs_lower() const {
    BoundedReal r(prec_);
    mpfr_abs(r.mid_, mid_, MPFR_RNDD);
    mpfr_sub(r.mid_, r.mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(r.mid_) < 0) mpfr_set_zero(r.mid_, 1);
    return r;
}

bool BoundedReal::certainly_less(const BoundedReal& o) const {
    BoundedReal a = upper(), b = o.lower();
    return mpfr_less_p(a.mid_, b.mid_) != 0;
}

bool BoundedReal::certainly_leq(const BoundedReal& o) const {
    BoundedReal a = upper(), b = o.lower();
    return mpfr_lessequal_p(a.mid_, b.mid_) != 0;
}

BoundedReal BoundedReal::operator-() const {
    BoundedReal r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

BoundedReal BoundedReal::abs() const {
    BoundedReal r(*this);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b) {
    BoundedReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal operator-(const BoundedReal& a, const BoundedReal& b) {
    BoundedReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

void BoundedReal::add_assign(const BoundedReal& o) {
    int t = mpfr_add(mid_, mid_, o.mid_, MPFR_RNDN);
    mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
    bump_rad_ulp(t);
}

BoundedReal operator*(const BoundedReal& a, const BoundedReal& b) {
    BoundedReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a| rb + |b| ra + ra rb
    mpfr_t ma, mb, acc;
    mpfr_init2(ma, kRadPrec);
    mpfr_init2(mb, kRadPrec);
    mpfr_init2(acc, kRadPrec);
    abs_up(ma, a.mid_);
    abs_up(mb, b.mid_);
    mpfr_mul(acc, ma, b.rad_, MPFR_RNDU);
    mpfr_fma(acc, mb, a.rad_, acc, MPFR_RNDU);
    mpfr_fma(acc, a.rad_, b.rad_, acc, MPFR_RNDU);
    mpfr_set(r.rad_, acc, MPFR_RNDU);
    mpfr_clears(ma, mb, acc, nullptr);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal operator/(const BoundedReal& a, const BoundedReal& b) {
    BoundedReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // lower bound of |b|
    mpfr_t lb, num, mq;
    mpfr_init2(lb, kRadPrec);
    mpfr_init2(num, kRadPrec);
    mpfr_init2(mq, kRadPrec);
    mpfr_abs(lb, b.mid_, MPFR_RNDD);
    mpfr_sub(lb, lb, b.rad_, MPFR_RNDD);
    if (mpfr_sgn(lb) <= 0) {
        mpfr_set_inf(r.rad_, 1);
    } else {
        // (ra + (|q| + ulp) rb) / lb
        abs_up(mq, r.mid_);
        if (mpfr_regular_p(r.mid_)) {
            mpfr_t u;
            mpfr_init2(u, kRadPrec);
            mpfr_set_ui_2exp(u, 1, mpfr_get_exp(r.mid_) - r.prec_, MPFR_RNDU);
            mpfr_add(mq, mq, u, MPFR_RNDU);
            mpfr_clear(u);
        }
        mpfr_mul(num, mq, b.rad_, MPFR_RNDU);
        mpfr_add(num, num, a.rad_, MPFR_RNDU);
        mpfr_div(r.rad_, num, lb, MPFR_RNDU);
    }
    mpfr_clears(lb, num, mq, nullptr);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::sqrt() const {
    mpfr_t lb;
    mpfr_init2(lb, prec_);
    mpfr_sub(lb, mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(lb) > 0) {
        BoundedReal r(prec_);
        int t = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
        // rad / (2 sqrt(lb))
        mpfr_t s;
        mpfr_init2(s, kRadPrec);
        mpfr_sqrt(s, lb, MPFR_RNDD);
        mpfr_mul_2ui(s, s, 1, MPFR_RNDD);
        mpfr_div(r.rad_, rad_, s, MPFR_RNDU);
        mpfr_clear(s);
        r.bump_rad_ulp(t);
        mpfr_clear(lb);
        return r;
    }
    // ball touches zero: cover [0, sqrt(sup)]
    mpfr_t sup;
    mpfr_init2(sup, prec_);
    mpfr_add(sup, mid_, rad_, MPFR_RNDU);
    if (mpfr_sgn(sup) < 0) {
        mpfr_clears(lb, sup, nullptr);
        throw NegativeArgument("sqrt of a certainly negative value");
    }
    BoundedReal hi(prec_);
    mpfr_sqrt(hi.mid_, sup, MPFR_RNDU);
    mpfr_clears(lb, sup, nullptr);
    return from_endpoints(BoundedReal(prec_), hi);
}

BoundedReal BoundedReal::exp() const {
    BoundedReal r(prec_);
    int t = mpfr_exp(r.mid_, mid_, MPFR_RNDN);
    // rad * exp(mid + rad)
    mpfr_t m2, e2;
    mpfr_init2(m2, kRadPrec);
    mpfr_init2(e2, kRadPrec);
    mpfr_add(m2, mid_, rad_, MPFR_RNDU);
    mpfr_exp(e2, m2, MPFR_RNDU);
    mpfr_mul(r.rad_, e2, rad_, MPFR_RNDU);
    mpfr_clears(m2, e2, nullptr);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::log() const {
    mpfr_t lb;
    mpfr_init2(lb, prec_);
    mpfr_sub(lb, mid_, rad_, MPFR_RNDD);
    if (mpfr_sgn(lb) <= 0) {
        mpfr_clear(lb);
        throw DomainError("log of a value not certainly positive");
    }
    BoundedReal r(prec_);
    int t = mpfr_log(r.mid_, mid_, MPFR_RNDN);
    mpfr_div(r.rad_, rad_, lb, MPFR_RNDU);
    mpfr_clear(lb);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::sin() const {
    BoundedReal r(prec_);
    int t = mpfr_sin(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::cos() const {
    BoundedReal r(prec_);
    int t = mpfr_cos(r.mid_, mid_, MPFR_RNDN);
    mpfr_set(r.rad_, rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

BoundedReal BoundedReal::pow_int(long e) const {
    if (e == 0) return from_long(1, prec_);
    if (e < 0) return from_long(1, prec_) / pow_int(-e);
    BoundedReal base(*this), acc = from_long(1, prec_);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

BoundedReal BoundedReal::pow_half(long num) const {
    if (num % 2 == 0) return pow_int(num / 2);
    return pow_int(num).sqrt();
}

BoundedReal BoundedReal::pow_quarter(long num) const {
    if (num % 2 == 0) return pow_half(num / 2);
    return pow_int(num).sqrt().sqrt();
}

BoundedReal BoundedReal::pow(const BoundedReal& y) const {
    return (y * log()).exp();
}

void BoundedReal::widen_by(const BoundedReal& extra) {
    BoundedReal u = extra.abs_upper();
    mpfr_add(rad_, rad_, u.mid_, MPFR_RNDU);
}

BoundedReal min_ball(const BoundedReal& a, const BoundedReal& b) {
    BoundedReal lo_a = a.lower(), lo_b = b.lower();
    BoundedReal hi_a = a.upper(), hi_b = b.upper();
    const BoundedReal& lo = mpfr_less_p(lo_a.mid_raw(), lo_b.mid_raw()) ? lo_a : lo_b;
    const BoundedReal& hi = mpfr_less_p(hi_a.mid_raw(), hi_b.mid_raw()) ? hi_a : hi_b;
    return BoundedReal::from_endpoints(lo, hi);
}

// ---------------------------------------------------------------------------

BoundedComplex::BoundedComplex(Prec prec) : re_(prec), im_(prec) {}

BoundedComplex::BoundedComplex(BoundedReal re, BoundedReal im)
    : re_(std::move(re)), im_(std::move(im)) {}

BoundedComplex BoundedComplex::from_real(const BoundedReal& re) {
    return BoundedComplex(re, BoundedReal(re.precision()));
}

BoundedComplex BoundedComplex::unit_root(const Int& num, const Int& den, Prec prec) {
    if (den < 1) throw DomainError("unit_root: denominator must be >= 1");
    Int t = mod_reduce(num, den);
    BoundedReal theta = BoundedReal::pi(prec) * BoundedReal::from_long(2, prec) *
                        BoundedReal::from_int(t, prec) / BoundedReal::from_int(den, prec);
    return BoundedComplex(theta.cos(), theta.sin());
}

BoundedComplex BoundedComplex::unit_rational(const Rational& q, Prec prec) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    return unit_root(num, den, prec);
}

BoundedComplex BoundedComplex::operator-() const { return BoundedComplex(-re_, -im_); }

BoundedComplex BoundedComplex::conj() const { return BoundedComplex(re_, -im_); }

BoundedComplex operator+(const BoundedComplex& a, const BoundedComplex& b) {
    return BoundedComplex(a.re_ + b.re_, a.im_ + b.im_);
}

BoundedComplex operator-(const BoundedComplex& a, const BoundedComplex& b) {
    return BoundedComplex(a.re_ - b.re_, a.im_ - b.im_);
}

BoundedComplex operator*(const BoundedComplex& a, const BoundedComplex& b) {
    return BoundedComplex(a.re_ * b.re_ - a.im_ * b.im_,
                          a.re_ * b.im_ + a.im_ * b.re_);
}

BoundedComplex operator/(const BoundedComplex& a, const BoundedComplex& b) {
    BoundedReal d = b.re_ * b.re_ + b.im_ * b.im_;
    return BoundedComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                          (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

BoundedComplex BoundedComplex::scaled(const BoundedReal& s) const {
    return BoundedComplex(re_ * s, im_ * s);
}

void BoundedComplex::add_assign(const BoundedComplex& o) {
    re_.add_assign(o.re_);
    im_.add_assign(o.im_);
}

BoundedComplex BoundedComplex::times_i_power(long k) const {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
        case 0: return *this;
        case 1: return BoundedComplex(-im_, re_);
        case 2: return BoundedComplex(-re_, -im_);
        default: return BoundedComplex(im_, -re_);
    }
}

BoundedReal BoundedComplex::abs_ball() const {
    return (re_ * re_ + im_ * im_).sqrt();
}

BoundedReal BoundedComplex::abs_upper() const {
    return abs_ball().abs_upper();
}

std::string BoundedComplex::to_string(int digits) const {
    return re_.mid_string(digits) + " + " + im_.mid_string(digits) + "*I (rad " +
           re_.rad_string() + ", " + im_.rad_string() + ")";
}

// ---------------------------------------------------------------------------

ComplexAccumulator::ComplexAccumulator(Prec prec) : count_(0), prec_(prec) {
    mpfr_init2(re_, prec_);
    mpfr_init2(im_, prec_);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
    mpfr_init2(rad_re_, kRadPrec);
    mpfr_init2(rad_im_, kRadPrec);
    mpfr_set_zero(rad_re_, 1);
    mpfr_set_zero(rad_im_, 1);
    emax_re_ = emax_im_ = mpfr_get_emin();
}

ComplexAccumulator::~ComplexAccumulator() {
    mpfr_clears(re_, im_, rad_re_, rad_im_, nullptr);
}

void ComplexAccumulator::track(int tr, int ti) {
    if (tr != 0 && mpfr_regular_p(re_)) emax_re_ = std::max(emax_re_, mpfr_get_exp(re_));
    if (ti != 0 && mpfr_regular_p(im_)) emax_im_ = std::max(emax_im_, mpfr_get_exp(im_));
    ++count_;
}

void ComplexAccumulator::add(const BoundedComplex& term) {
    int tr = mpfr_add(re_, re_, term.re_.mid_, MPFR_RNDN);
    int ti = mpfr_add(im_, im_, term.im_.mid_, MPFR_RNDN);
    mpfr_add(rad_re_, rad_re_, term.re_.rad_, MPFR_RNDU);
    mpfr_add(rad_im_, rad_im_, term.im_.rad_, MPFR_RNDU);
    track(tr, ti);
}

void ComplexAccumulator::sub(const BoundedComplex& term) {
    int tr = mpfr_sub(re_, re_, term.re_.mid_, MPFR_RNDN);
    int ti = mpfr_sub(im_, im_, term.im_.mid_, MPFR_RNDN);
    mpfr_add(rad_re_, rad_re_, term.re_.rad_, MPFR_RNDU);
    mpfr_add(rad_im_, rad_im_, term.im_.rad_, MPFR_RNDU);
    track(tr, ti);
}

void ComplexAccumulator::add_rotated(const BoundedComplex& term, long i_power, int sign) {
    long m = ((i_power % 4) + 4) % 4;
    // (re + i im) * i^m, then * sign
    mpfr_srcptr sr;
    mpfr_srcptr si;
    int negate_r = 0, negate_i = 0;
    switch (m) {
        case 0: sr = term.re_.mid_; si = term.im_.mid_; break;
        case 1: sr = term.im_.mid_; si = term.re_.mid_; negate_r = 1; break;
        case 2: sr = term.re_.mid_; si = term.im_.mid_; negate_r = 1; negate_i = 1; break;
        default: sr = term.im_.mid_; si = term.re_.mid_; negate_i = 1; break;
    }
    if (sign < 0) {
        negate_r = !negate_r;
        negate_i = !negate_i;
    }
    int tr = negate_r ? mpfr_sub(re_, re_, sr, MPFR_RNDN) : mpfr_add(re_, re_, sr, MPFR_RNDN);
    int ti = negate_i ? mpfr_sub(im_, im_, si, MPFR_RNDN) : mpfr_add(im_, im_, si, MPFR_RNDN);
    mpfr_add(rad_re_, rad_re_, (m == 0 || m == 2) ? term.re_.rad_ : term.im_.rad_, MPFR_RNDU);
    mpfr_add(rad_im_, rad_im_, (m == 0 || m == 2) ? term.im_.rad_ : term.re_.rad_, MPFR_RNDU);
    track(tr, ti);
}

BoundedComplex ComplexAccumulator::value() const {
    BoundedReal re(prec_), im(prec_);
    mpfr_set(re.mid_, re_, MPFR_RNDN);
    mpfr_set(im.mid_, im_, MPFR_RNDN);
    mpfr_set(re.rad_, rad_re_, MPFR_RNDU);
    mpfr_set(im.rad_, rad_im_, MPFR_RNDU);
    if (count_ > 0) {
        mpfr_t u;
        mpfr_init2(u, kRadPrec);
        if (emax_re_ > mpfr_get_emin()) {
            mpfr_set_ui_2exp(u, count_, emax_re_ - prec_, MPFR_RNDU);
            mpfr_add(re.rad_, re.rad_, u, MPFR_RNDU);
        }
        if (emax_im_ > mpfr_get_emin()) {
            mpfr_set_ui_2exp(u, count_, emax_im_ - prec_, MPFR_RNDU);
            mpfr_add(im.rad_, im.rad_, u, MPFR_RNDU);
        }
        mpfr_clear(u);
    }
    return BoundedComplex(std::move(re), std::move(im));
}

void ComplexAccumulator::add_mid(const BoundedComplex& term) {
    int tr = mpfr_add(re_, re_, term.re_.mid_, MPFR_RNDN);
    int ti = mpfr_add(im_, im_, term.im_.mid_, MPFR_RNDN);
    track(tr, ti);
}

BoundedComplex ComplexAccumulator::value_uniform(const BoundedReal& term_rad) const {
    BoundedReal re(prec_), im(prec_);
    mpfr_set(re.mid_, re_, MPFR_RNDN);
    mpfr_set(im.mid_, im_, MPFR_RNDN);
    // accumulated term radii: count * sup(term_rad), plus roundoff
    mpfr_t tr, u;
    mpfr_init2(tr, kRadPrec);
    mpfr_init2(u, kRadPrec);
    mpfr_add(tr, term_rad.mid_, term_rad.rad_, MPFR_RNDU);
    mpfr_mul_ui(tr, tr, count_, MPFR_RNDU);
    mpfr_set(re.rad_, tr, MPFR_RNDU);
    mpfr_set(im.rad_, tr, MPFR_RNDU);
    if (count_ > 0 && emax_re_ > mpfr_get_emin()) {
        mpfr_set_ui_2exp(u, count_, emax_re_ - prec_, MPFR_RNDU);
        mpfr_add(re.rad_, re.rad_, u, MPFR_RNDU);
    }
    if (count_ > 0 && emax_im_ > mpfr_get_emin()) {
        mpfr_set_ui_2exp(u, count_, emax_im_ - prec_, MPFR_RNDU);
        mpfr_add(im.rad_, im.rad_, u, MPFR_RNDU);
    }
    mpfr_clears(tr, u, nullptr);
    return BoundedComplex(std::move(re), std::move(im));
}

std::vector<BoundedComplex> unit_root_table(long n, Prec prec) {
    std::vector<BoundedComplex> table;
    table.reserve(static_cast<size_t>(n));
    BoundedReal step = BoundedReal::pi(prec) * BoundedReal::from_long(2, prec) /
                       BoundedReal::from_long(n, prec);
    for (long t = 0; t < n; ++t) {
        BoundedReal theta = step * BoundedReal::from_long(t, prec);
        table.emplace_back(theta.cos(), theta.sin());
    }
    return table;
}

BoundedReal table_rad_bound(const std::vector<BoundedComplex>& table) {
    BoundedReal out(kRadPrec);
    mpfr_ptr m = out.mid_raw();
    for (const BoundedComplex& z : table) {
        if (mpfr_cmp(z.real().rad_raw(), m) > 0) mpfr_set(m, z.real().rad_raw(), MPFR_RNDU);
        if (mpfr_cmp(z.imag().rad_raw(), m) > 0) mpfr_set(m, z.imag().rad_raw(), MPFR_RNDU);
    }
    return out;
}

}  // namespace jpcert
