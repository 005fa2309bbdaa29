#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "p3/exact/scalar.hpp"

namespace p3::num {

// Arbitrary-precision real backed by MPFR. Every value carries its own
// working precision; binary operations produce results at the minimum
// precision of their operands, so precision is never silently upgraded.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const mpq_class& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, o.prec()); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static Real pi(mpfr_prec_t p) { Real r(p); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static Real eulerGamma(mpfr_prec_t p) { Real r(p); mpfr_const_euler(r.v_, MPFR_RNDN); return r; }
  static Real nan(mpfr_prec_t p) { Real r(p); mpfr_set_nan(r.v_); return r; }

  bool isNan() const { return mpfr_nan_p(v_); }
  bool isZero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long toLong() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool isInteger() const { return mpfr_integer_p(v_); }
  std::string str(size_t digits = 0) const;

  friend mpfr_prec_t minPrec(const Real& a, const Real& b) {
    return a.prec() < b.prec() ? a.prec() : b.prec();
  }

#define P3_REAL_BINOP(op, fn)                                  \
  friend Real operator op(const Real& a, const Real& b) {      \
    Real r(minPrec(a, b));                                     \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                           \
    return r;                                                  \
  }
  P3_REAL_BINOP(+, mpfr_add)
  P3_REAL_BINOP(-, mpfr_sub)
  P3_REAL_BINOP(*, mpfr_mul)
  P3_REAL_BINOP(/, mpfr_div)
#undef P3_REAL_BINOP

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long b) { return a + (-b); }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }

#define P3_REAL_UNFN(name, fn)            \
  friend Real name(const Real& a) {       \
    Real r(a.prec());                     \
    fn(r.v_, a.v_, MPFR_RNDN);            \
    return r;                             \
  }
  P3_REAL_UNFN(sqrt, mpfr_sqrt)
  P3_REAL_UNFN(exp, mpfr_exp)
  P3_REAL_UNFN(log, mpfr_log)
  P3_REAL_UNFN(sin, mpfr_sin)
  P3_REAL_UNFN(cos, mpfr_cos)
  P3_REAL_UNFN(tan, mpfr_tan)
  P3_REAL_UNFN(sinh, mpfr_sinh)
  P3_REAL_UNFN(cosh, mpfr_cosh)
  P3_REAL_UNFN(tanh, mpfr_tanh)
  P3_REAL_UNFN(abs, mpfr_abs)
  P3_REAL_UNFN(floorR, mpfr_floor)
  P3_REAL_UNFN(roundR, mpfr_round)
  P3_REAL_UNFN(lgammaReal, mpfr_lngamma)
#undef P3_REAL_UNFN

  friend Real atan2r(const Real& y, const Real& x) {
    Real r(minPrec(y, x));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
  }
  friend Real powsi(const Real& a, long k) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real zetaUi(unsigned long k, mpfr_prec_t p) {
    Real r(p);
    mpfr_zeta_ui(r.v_, k, MPFR_RNDN);
    return r;
  }
  friend Real ldexpR(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  // |a| as a power-of-two magnitude estimate; very negative if zero.
  friend long magnitude2(const Real& a) {
    if (mpfr_zero_p(a.v_) || mpfr_nan_p(a.v_)) return -((1L << 40));
    return mpfr_get_exp(a.v_);
  }

 private:
  mpfr_t v_;
};

// Complex value over Real; both components share one precision.
class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  Complex(double re, double im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
  static Complex fromReal(Real r) {
    Real z(r.prec());
    return Complex(std::move(r), std::move(z));
  }
  static Complex i(mpfr_prec_t p) { return Complex(Real(0L, p), Real(1L, p)); }
  static Complex fromScalar(const p3::exact::Scalar& s, mpfr_prec_t p) {
    return Complex(Real(s.re(), p), Real(s.im(), p));
  }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return minPrec(re_, im_); }
  bool isZero() const { return re_.isZero() && im_.isZero(); }

  Complex operator-() const { return Complex(-re_, -im_); }
  Complex operator+(const Complex& o) const { return Complex(re_ + o.re_, im_ + o.im_); }
  Complex operator-(const Complex& o) const { return Complex(re_ - o.re_, im_ - o.im_); }
  Complex operator*(const Complex& o) const {
    return Complex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Complex operator*(const Real& s) const { return Complex(re_ * s, im_ * s); }
  Complex operator*(long s) const { return Complex(re_ * s, im_ * s); }
  Complex operator/(const Complex& o) const {
    Real n2 = o.re_ * o.re_ + o.im_ * o.im_;
    return Complex((re_ * o.re_ + im_ * o.im_) / n2, (im_ * o.re_ - re_ * o.im_) / n2);
  }
  Complex operator/(const Real& s) const { return Complex(re_ / s, im_ / s); }
  Complex operator/(long s) const { return Complex(re_ / s, im_ / s); }
  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  Complex conj() const { return Complex(re_, -im_); }
  friend Real absC(const Complex& z) {
    Real r(z.prec());
    // hypot avoids overflow on extreme exponents
    mpfr_hypot(r.raw(), z.re_.raw(), z.im_.raw(), MPFR_RNDN);
    return r;
  }
  friend Real argC(const Complex& z) { return atan2r(z.im_, z.re_); }

  std::string str(size_t digits = 0) const;

 private:
  Real re_, im_;

  friend Real minPrecC(const Complex& a, const Complex& b) {
    return a.prec() < b.prec() ? a.prec() : b.prec();
  }
};

Complex expC(const Complex& z);
Complex logC(const Complex& z);  // principal branch
Complex sqrtC(const Complex& z);
Complex powC(const Complex& z, const Complex& w);  // exp(w log z)
Complex powC(const Complex& z, long k);
Complex sinC(const Complex& z);
Complex cosC(const Complex& z);
Complex sinhC(const Complex& z);
Complex coshC(const Complex& z);

p3::num::Complex evalPolyC(const p3::exact::Scalar& s, mpfr_prec_t p);

}  // namespace p3::num
