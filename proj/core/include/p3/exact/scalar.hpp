#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace p3::exact {

// Gaussian rational a + b*i with exact rational parts in lowest terms.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}
  explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar rational(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar fromStrings(const std::string& re_num, const std::string& re_den,
                            const std::string& im_num, const std::string& im_den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool isZero() const { return re_ == 0 && im_ == 0; }
  bool isOne() const { return re_ == 1 && im_ == 0; }
  bool isReal() const { return im_ == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
  Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Scalar operator/(const Scalar& o) const {
    if (o.isZero()) throw std::domain_error("Scalar: division by zero");
    mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
    return Scalar((re_ * o.re_ + im_ * o.im_) / n2, (im_ * o.re_ - re_ * o.im_) / n2);
  }
  Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const { return Scalar(1) / *this; }
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Lexicographic order on (re, im); used only for canonical term ordering.
  bool operator<(const Scalar& o) const {
    int c = cmp(re_, o.re_);
    if (c != 0) return c < 0;
    return cmp(im_, o.im_) < 0;
  }

  std::string str() const;

 private:
  mpq_class re_, im_;
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

}  // namespace p3::exact
