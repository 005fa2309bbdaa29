#pragma once

#include <map>

#include "p3/exact/ratfunc.hpp"

namespace p3::exact {

enum class Grading : int8_t { t = 0, r_inv = 1 };
const char* gradingName(Grading g);

// Exact rational power p/q with small components, for series powers and steps.
struct Power {
  long num = 0;
  long den = 1;
  Power() = default;
  Power(long n, long d = 1);
  bool operator==(const Power& o) const { return num == o.num && den == o.den; }
  bool operator<(const Power& o) const { return num * o.den < o.num * den; }
  std::string str() const;
};

// Truncated formal series sum_k c_k * X^(k*step) in the grading variable X
// (t or 1/r), coefficients in RatFunc. Powers are integer multiples of the
// step; negative multiples are allowed (finite principal parts occur in the
// strong-coupling identities). "Truncation at T" means every coefficient of
// power <= T is stored exactly.
class Series {
 public:
  Series() = default;
  Series(Grading g, long stepDen, long truncIdx)
      : grading_(g), stepDen_(stepDen), trunc_(truncIdx) {}

  // Constant series c + O(X^(trunc+step)).
  static Series constant(Grading g, RatFunc c, long truncIdx, long stepDen = 1);
  static Series zero(Grading g, long truncIdx, long stepDen = 1) {
    return Series(g, stepDen, truncIdx);
  }
  // Single term c * X^(idx/stepDen).
  static Series term(Grading g, RatFunc c, long idx, long truncIdx, long stepDen = 1);

  Grading grading() const { return grading_; }
  long stepDen() const { return stepDen_; }
  long truncIdx() const { return trunc_; }
  Power step() const { return Power(1, stepDen_); }
  Power truncation() const { return Power(trunc_, stepDen_); }
  const std::map<long, RatFunc>& coeffs() const { return c_; }

  bool isZero() const { return c_.empty(); }
  // Lowest stored power index; requires !isZero().
  long valuationIdx() const { return c_.begin()->first; }

  const RatFunc& coeffIdx(long idx) const;
  RatFunc coeffPower(const Power& p) const;  // zero if not a step multiple
  void setCoeffIdx(long idx, RatFunc v);

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator/(const Series& o) const;
  Series& operator+=(const Series& o) { *this = *this + o; return *this; }
  Series& operator-=(const Series& o) { *this = *this - o; return *this; }
  Series& operator*=(const Series& o) { *this = *this * o; return *this; }

  Series operator*(const RatFunc& c) const;
  Series mulMonomial(const RatFunc& c, long idxShift) const;  // * c X^(shift/stepDen)
  Series pow(long e) const;

  Series exp() const;  // requires valuation >= one step
  Series log() const;  // requires constant term == 1

  // d/dX; truncation drops by one power of X.
  Series diffGrading() const;
  // Term-wise d/dv on coefficients.
  Series diffSym(Var v) const;

  // X d/dX (Euler operator); truncation unchanged.
  Series euler() const;

  Series truncated(long newTruncIdx) const;
  Series withStepDen(long newStepDen) const;  // refine step (newStepDen multiple)
  Series mapCoeffs(const std::function<RatFunc(const RatFunc&)>& f) const;

  bool operator==(const Series& o) const;

  std::string str() const;

 private:
  Grading grading_ = Grading::t;
  long stepDen_ = 1;
  long trunc_ = 0;
  std::map<long, RatFunc> c_;
  void prune();
  static void align(Series& a, Series& b);
};

}  // namespace p3::exact
