#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3/exact/scalar.hpp"

namespace p3::exact {

// Symbolic variables available to polynomials. The first five are the domain
// parameters; delta and cc hold Virasoro highest weight and central charge.
enum class Var : int8_t {
  sigma = 0,
  nu = 1,
  eps1 = 2,
  eps2 = 3,
  nu_t = 4,
  delta = 5,
  cc = 6,
};
constexpr int kNumVars = 7;
const char* varName(Var v);
std::optional<Var> varFromName(const std::string& name);

using Expo = std::array<int16_t, kNumVars>;

// Multivariate polynomial over Scalar. Terms are kept sorted in descending
// lexicographic order of exponent tuples; no zero coefficients are stored.
class Poly {
 public:
  using Term = std::pair<Expo, Scalar>;

  Poly() = default;
  explicit Poly(Scalar c);
  Poly(long c) : Poly(Scalar(c)) {}
  static Poly var(Var v, int exp = 1);
  static Poly monomial(const Expo& e, Scalar c);
  static Poly fromTerms(std::vector<Term> terms);  // merges duplicates

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  const Scalar& constantValue() const;  // requires isConstant()
  size_t termCount() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int degree(Var v) const;
  int totalDegree() const;
  bool dependsOn(Var v) const { return degree(v) > 0; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& c) const;
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(long e) const;
  Poly derivative(Var v) const;

  // Leading term in lex order (largest exponent tuple). Requires !isZero().
  const Term& leading() const { return terms_.front(); }

  // View as a univariate polynomial in v with Poly coefficients.
  std::map<int, Poly> byVar(Var v) const;
  static Poly collect(Var v, const std::map<int, Poly>& coeffs);
  Poly coeffOf(Var v, int k) const;

  // Substitute v -> value (polynomial). Exact, via Horner.
  Poly subst(Var v, const Poly& value) const;
  Scalar evalAll(const std::array<Scalar, kNumVars>& vals) const;

  // Exact division: returns quotient iff divisor divides exactly.
  static std::optional<Poly> divideExact(const Poly& num, const Poly& den);
  static Poly gcd(const Poly& a, const Poly& b);

  // Scales so the lex-leading coefficient equals 1. Requires !isZero().
  Poly monicLex() const;

  std::string str() const;

 private:
  std::vector<Term> terms_;  // descending lex on Expo
  void normalize();          // sort + merge + drop zeros
  friend struct PolyOps;
};

Poly operator*(const Scalar& c, const Poly& p);

}  // namespace p3::exact
