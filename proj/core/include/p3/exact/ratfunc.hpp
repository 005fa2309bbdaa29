#pragma once

#include "p3/exact/poly.hpp"

namespace p3::exact {

// Rational function num/den over the Gaussian rationals. Kept reduced
// (gcd(num, den) a unit) with den lex-monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  explicit RatFunc(Scalar c) : num_(std::move(c)), den_(1) {}
  explicit RatFunc(Poly n) : num_(std::move(n)), den_(1) {}
  RatFunc(Poly n, Poly d);

  static RatFunc var(Var v) { return RatFunc(Poly::var(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_ == den_; }
  bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
  Scalar constantValue() const;  // requires isConstant()
  bool isPolynomial() const { return den_.isConstant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }
  RatFunc& operator/=(const RatFunc& o) { *this = *this / o; return *this; }
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(long e) const;
  RatFunc derivative(Var v) const;
  RatFunc subst(Var v, const RatFunc& value) const;
  Scalar evalAll(const std::array<Scalar, kNumVars>& vals) const;

  std::string str() const;

 private:
  Poly num_, den_;
  void reduce();
};

RatFunc substPoly(const Poly& p, Var v, const RatFunc& value);

inline RatFunc ringInverse(const RatFunc& r) { return r.inverse(); }

}  // namespace p3::exact
