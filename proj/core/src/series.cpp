#include "p3/exact/series.hpp"

#include <numeric>
#include <sstream>

namespace p3::exact {

const char* gradingName(Grading g) { return g == Grading::t ? "t" : "r_inv"; }

Power::Power(long n, long d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("Power: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Power::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

Series Series::constant(Grading g, RatFunc c, long truncIdx, long stepDen) {
  Series s(g, stepDen, truncIdx);
  if (!c.isZero() && truncIdx >= 0) s.c_[0] = std::move(c);
  return s;
}

Series Series::term(Grading g, RatFunc c, long idx, long truncIdx, long stepDen) {
  Series s(g, stepDen, truncIdx);
  if (!c.isZero() && idx <= truncIdx) s.c_[idx] = std::move(c);
  return s;
}

const RatFunc& Series::coeffIdx(long idx) const {
  static const RatFunc zero;
  auto it = c_.find(idx);
  return it == c_.end() ? zero : it->second;
}

RatFunc Series::coeffPower(const Power& p) const {
  if ((p.num * stepDen_) % p.den != 0) return RatFunc();
  return coeffIdx(p.num * stepDen_ / p.den);
}

void Series::setCoeffIdx(long idx, RatFunc v) {
  if (idx > trunc_) throw std::domain_error("Series: coefficient beyond truncation");
  if (v.isZero())
    c_.erase(idx);
  else
    c_[idx] = std::move(v);
}

void Series::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second.isZero() || it->first > trunc_)
      it = c_.erase(it);
    else
      ++it;
  }
}

void Series::align(Series& a, Series& b) {
  if (a.grading_ != b.grading_)
    throw std::domain_error("Series: grading variable mismatch");
  long d = std::lcm(a.stepDen_, b.stepDen_);
  a = a.withStepDen(d);
  b = b.withStepDen(d);
}

Series Series::withStepDen(long newStepDen) const {
  if (newStepDen == stepDen_) return *this;
  if (newStepDen % stepDen_ != 0)
    throw std::domain_error("Series: step refinement must be a multiple");
  long f = newStepDen / stepDen_;
  Series r(grading_, newStepDen, trunc_ * f);
  for (const auto& [k, v] : c_) r.c_[k * f] = v;
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

Series Series::operator+(const Series& o) const {
  Series a = *this, b = o;
  align(a, b);
  Series r(a.grading_, a.stepDen_, std::min(a.trunc_, b.trunc_));
  r.c_ = std::move(a.c_);
  for (auto& [k, v] : b.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end())
      r.c_[k] = std::move(v);
    else
      it->second += v;
  }
  r.prune();
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  Series a = *this, b = o;
  align(a, b);
  // Exactness bound: coefficient at p needs all splits p = x + y with x, y in
  // the known ranges, so trunc = min(ta + vb, tb + va).
  long va = a.isZero() ? 0 : a.valuationIdx();
  long vb = b.isZero() ? 0 : b.valuationIdx();
  long tr = std::min(a.trunc_ + vb, b.trunc_ + va);
  Series r(a.grading_, a.stepDen_, tr);
  if (a.isZero() || b.isZero()) return r;
  for (const auto& [ka, va_] : a.c_)
    for (const auto& [kb, vb_] : b.c_) {
      long k = ka + kb;
      if (k > tr) continue;
      RatFunc p = va_ * vb_;
      if (p.isZero()) continue;
      auto it = r.c_.find(k);
      if (it == r.c_.end())
        r.c_[k] = std::move(p);
      else
        it->second += p;
    }
  r.prune();
  return r;
}

Series Series::operator/(const Series& o) const {
  Series a = *this, b = o;
  align(a, b);
  if (b.isZero()) throw std::domain_error("Series: division by zero series");
  long vb = b.valuationIdx();
  const RatFunc& lead = b.c_.begin()->second;
  // h = a/b with h_k solved from a = h*b by ascending power.
  long va = a.isZero() ? a.trunc_ + 1 : a.valuationIdx();
  long tr = std::min(a.trunc_ - vb, b.trunc_ - 2 * vb + va);
  Series r(a.grading_, a.stepDen_, tr);
  if (a.isZero()) return r;
  RatFunc leadInv = lead.inverse();
  for (long k = va - vb; k <= tr; ++k) {
    RatFunc acc = a.coeffIdx(k + vb);
    for (const auto& [kr, vr] : r.c_) {
      long need = k + vb - kr;
      if (need <= vb) break;  // map is ascending; b has no terms below vb
      acc -= vr * b.coeffIdx(need);
    }
    RatFunc hk = acc * leadInv;
    if (!hk.isZero()) r.c_[k] = std::move(hk);
  }
  return r;
}

Series Series::operator*(const RatFunc& c) const {
  Series r(grading_, stepDen_, trunc_);
  if (c.isZero()) return r;
  for (const auto& [k, v] : c_) {
    RatFunc p = v * c;
    if (!p.isZero()) r.c_[k] = std::move(p);
  }
  return r;
}

Series Series::mulMonomial(const RatFunc& c, long idxShift) const {
  Series r(grading_, stepDen_, trunc_ + idxShift);
  if (c.isZero()) return r;
  for (const auto& [k, v] : c_) {
    RatFunc p = v * c;
    if (!p.isZero()) r.c_[k + idxShift] = std::move(p);
  }
  return r;
}

Series Series::pow(long e) const {
  if (e < 0) return Series::constant(grading_, RatFunc(1), trunc_, stepDen_) / pow(-e);
  Series r = Series::constant(grading_, RatFunc(1), trunc_, stepDen_);
  Series b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Series Series::exp() const {
  if (!isZero() && valuationIdx() <= 0)
    throw std::domain_error("Series::exp: nonzero constant term");
  // exp(f) solves g' = f' g, g_0 = 1, i.e. k g_k = sum_j j f_j g_{k-j}.
  Series r(grading_, stepDen_, trunc_);
  r.c_[0] = RatFunc(1);
  for (long k = 1; k <= trunc_; ++k) {
    RatFunc acc;
    for (const auto& [j, fj] : c_) {
      if (j > k) break;
      const RatFunc& g = r.coeffIdx(k - j);
      if (!g.isZero()) acc += fj * g * RatFunc(Scalar(mpq_class(j)));
    }
    if (!acc.isZero()) r.c_[k] = acc * RatFunc(Scalar(mpq_class(1, k)));
  }
  return r;
}

Series Series::log() const {
  if (coeffIdx(0) != RatFunc(1))
    throw std::domain_error("Series::log: constant term must be 1");
  // log(f): k h_k = k f_k - sum_{0<j<k} j h_j f_{k-j}.
  Series r(grading_, stepDen_, trunc_);
  for (long k = 1; k <= trunc_; ++k) {
    RatFunc acc = coeffIdx(k) * RatFunc(Scalar(mpq_class(k)));
    for (const auto& [j, hj] : r.c_) {
      if (j >= k) break;
      const RatFunc& f = coeffIdx(k - j);
      if (!f.isZero()) acc -= hj * f * RatFunc(Scalar(mpq_class(j)));
    }
    if (!acc.isZero()) r.c_[k] = acc * RatFunc(Scalar(mpq_class(1, k)));
  }
  return r;
}

Series Series::diffGrading() const {
  // d/dX X^(k/s) = (k/s) X^(k/s - 1); exactness drops by one power of X.
  Series r(grading_, stepDen_, trunc_ - stepDen_);
  for (const auto& [k, v] : c_) {
    if (k == 0) continue;
    long k2 = k - stepDen_;
    if (k2 > r.trunc_) continue;
    RatFunc p = v * RatFunc(Scalar(mpq_class(k, stepDen_)));
    if (!p.isZero()) r.c_[k2] = std::move(p);
  }
  return r;
}

Series Series::euler() const {
  Series r(grading_, stepDen_, trunc_);
  for (const auto& [k, v] : c_) {
    if (k == 0) continue;
    RatFunc p = v * RatFunc(Scalar(mpq_class(k, stepDen_)));
    if (!p.isZero()) r.c_[k] = std::move(p);
  }
  return r;
}

Series Series::diffSym(Var v) const {
  Series r(grading_, stepDen_, trunc_);
  for (const auto& [k, c] : c_) {
    RatFunc d = c.derivative(v);
    if (!d.isZero()) r.c_[k] = std::move(d);
  }
  return r;
}

Series Series::truncated(long newTruncIdx) const {
  Series r(grading_, stepDen_, std::min(trunc_, newTruncIdx));
  for (const auto& [k, v] : c_)
    if (k <= r.trunc_) r.c_[k] = v;
  return r;
}

Series Series::mapCoeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
  Series r(grading_, stepDen_, trunc_);
  for (const auto& [k, v] : c_) {
    RatFunc m = f(v);
    if (!m.isZero()) r.c_[k] = std::move(m);
  }
  return r;
}

bool Series::operator==(const Series& o) const {
  Series a = *this, b = o;
  align(a, b);
  long tr = std::min(a.trunc_, b.trunc_);
  for (const auto& [k, v] : a.c_)
    if (k <= tr && v != b.coeffIdx(k)) return false;
  for (const auto& [k, v] : b.c_)
    if (k <= tr && v != a.coeffIdx(k)) return false;
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  const char* x = grading_ == Grading::t ? "t" : "r^-1";
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << v.str() << "]*" << x << "^(" << Power(k, stepDen_).str() << ")";
  }
  if (first) os << "0";
  os << " + O(" << x << "^(" << Power(trunc_ + 1, stepDen_).str() << "))";
  return os.str();
}

}  // namespace p3::exact
