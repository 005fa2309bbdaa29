#include "p3/exact/ratfunc.hpp"

#include <sstream>

namespace p3::exact {

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.isZero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.isZero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.isConstant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!g.isConstant()) {
      num_ = *Poly::divideExact(num_, g);
      den_ = *Poly::divideExact(den_, g);
    }
  }
  Scalar lead = den_.leading().second;
  if (!lead.isOne()) {
    Scalar inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Scalar RatFunc::constantValue() const {
  return num_.constantValue() / den_.constantValue();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (isZero()) return o;
  if (o.isZero()) return *this;
  RatFunc r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    // Cross via gcd of denominators to keep intermediates small.
    Poly g = Poly::gcd(den_, o.den_);
    if (g.isConstant()) {
      r.num_ = num_ * o.den_ + o.num_ * den_;
      r.den_ = den_ * o.den_;
    } else {
      Poly da = *Poly::divideExact(den_, g);
      Poly db = *Poly::divideExact(o.den_, g);
      r.num_ = num_ * db + o.num_ * da;
      r.den_ = da * o.den_;
    }
  }
  r.reduce();
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (isZero() || o.isZero()) return RatFunc();
  // Cross-reduce before multiplying.
  Poly g1 = Poly::gcd(num_, o.den_);
  Poly g2 = Poly::gcd(o.num_, den_);
  Poly n1 = g1.isConstant() ? num_ : *Poly::divideExact(num_, g1);
  Poly d2 = g1.isConstant() ? o.den_ : *Poly::divideExact(o.den_, g1);
  Poly n2 = g2.isConstant() ? o.num_ : *Poly::divideExact(o.num_, g2);
  Poly d1 = g2.isConstant() ? den_ : *Poly::divideExact(den_, g2);
  RatFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  r.reduce();
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.isZero()) throw std::domain_error("RatFunc: division by zero");
  return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (isZero()) throw std::domain_error("RatFunc: inverse of zero");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  Scalar lead = r.den_.leading().second;
  if (!lead.isOne()) {
    Scalar inv = lead.inverse();
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RatFunc RatFunc::derivative(Var v) const {
  // (n/d)' = (n' d - n d') / d^2
  RatFunc r;
  r.num_ = num_.derivative(v) * den_ - num_ * den_.derivative(v);
  r.den_ = den_ * den_;
  r.reduce();
  return r;
}

RatFunc substPoly(const Poly& p, Var v, const RatFunc& value) {
  if (!p.dependsOn(v)) return RatFunc(p);
  auto coeffs = p.byVar(v);
  int dmax = coeffs.rbegin()->first;
  RatFunc acc;
  for (int k = dmax; k >= 0; --k) {
    acc = acc * value;
    auto it = coeffs.find(k);
    if (it != coeffs.end()) acc += RatFunc(it->second);
  }
  return acc;
}

RatFunc RatFunc::subst(Var v, const RatFunc& value) const {
  if (!num_.dependsOn(v) && !den_.dependsOn(v)) return *this;
  if (value.isPolynomial()) {
    Poly pv = value.num() * value.den().constantValue().inverse();
    return RatFunc(num_.subst(v, pv), den_.subst(v, pv));
  }
  return substPoly(num_, v, value) / substPoly(den_, v, value);
}

Scalar RatFunc::evalAll(const std::array<Scalar, kNumVars>& vals) const {
  Scalar d = den_.evalAll(vals);
  if (d.isZero()) throw std::domain_error("RatFunc::evalAll: pole");
  return num_.evalAll(vals) / d;
}

std::string RatFunc::str() const {
  if (isPolynomial()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  return os.str();
}

}  // namespace p3::exact
