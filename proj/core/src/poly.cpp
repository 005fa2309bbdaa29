#include "p3/exact/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace p3::exact {

namespace {

const char* kVarNames[kNumVars] = {"sigma", "nu", "eps1", "eps2", "nu_t", "delta", "cc"};

struct ExpoHash {
  size_t operator()(const Expo& e) const {
    // FNV-1a over the raw exponent bytes.
    size_t h = 1469598103934665603ull;
    const unsigned char* p = reinterpret_cast<const unsigned char*>(e.data());
    for (size_t i = 0; i < sizeof(int16_t) * kNumVars; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool lexGreater(const Expo& a, const Expo& b) { return a > b; }

Expo addExpo(const Expo& a, const Expo& b) {
  Expo r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<int16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

const char* varName(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> varFromName(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

Poly::Poly(Scalar c) {
  if (!c.isZero()) terms_.push_back({Expo{}, std::move(c)});
}

Poly Poly::var(Var v, int exp) {
  Expo e{};
  e[static_cast<int>(v)] = static_cast<int16_t>(exp);
  return monomial(e, Scalar(1));
}

Poly Poly::monomial(const Expo& e, Scalar c) {
  Poly p;
  if (!c.isZero()) p.terms_.push_back({e, std::move(c)});
  return p;
}

Poly Poly::fromTerms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return lexGreater(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.second.isZero(); }),
            out.end());
  terms_ = std::move(out);
}

bool Poly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Expo{});
}

const Scalar& Poly::constantValue() const {
  static const Scalar zero;
  if (terms_.empty()) return zero;
  return terms_[0].second;
}

int Poly::degree(Var v) const {
  int d = -1;
  const int idx = static_cast<int>(v);
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx]));
  return terms_.empty() ? -1 : d;
}

int Poly::totalDegree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < kNumVars; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  // Merge of two descending-sorted term lists.
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.isZero()) r.terms_.push_back({terms_[i].first, std::move(s)});
      ++i, ++j;
    } else if (lexGreater(terms_[i].first, o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (isZero() || o.isZero()) return Poly();
  if (o.terms_.size() == 1) {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Scalar s = c * o.terms_[0].second;
      if (!s.isZero()) r.terms_.push_back({addExpo(e, o.terms_[0].first), std::move(s)});
    }
    return r;  // multiplying by a monomial preserves lex order
  }
  if (terms_.size() == 1) return o * *this;
  std::unordered_map<Expo, Scalar, ExpoHash> acc;
  acc.reserve(terms_.size() * 2);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) acc[addExpo(ea, eb)] += ca * cb;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.isZero()) out.push_back({e, std::move(c)});
  Poly r;
  r.terms_ = std::move(out);
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return lexGreater(a.first, b.first); });
  return r;
}

Poly Poly::operator*(const Scalar& c) const {
  if (c.isZero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly operator*(const Scalar& c, const Poly& p) { return p * c; }

Poly Poly::pow(long e) const {
  if (e < 0) throw std::domain_error("Poly::pow: negative exponent");
  Poly r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(Var v) const {
  const int idx = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Expo e2 = e;
    e2[idx] = static_cast<int16_t>(e[idx] - 1);
    out.push_back({e2, c * Scalar(e[idx])});
  }
  return fromTerms(std::move(out));
}

std::map<int, Poly> Poly::byVar(Var v) const {
  const int idx = static_cast<int>(v);
  std::map<int, std::vector<Term>> buckets;
  for (const auto& [e, c] : terms_) {
    Expo e2 = e;
    int k = e[idx];
    e2[idx] = 0;
    buckets[k].push_back({e2, c});
  }
  std::map<int, Poly> out;
  for (auto& [k, ts] : buckets) out[k] = fromTerms(std::move(ts));
  return out;
}

Poly Poly::collect(Var v, const std::map<int, Poly>& coeffs) {
  Poly r;
  for (const auto& [k, p] : coeffs) r += p * Poly::var(v, k);
  return r;
}

Poly Poly::coeffOf(Var v, int k) const {
  const int idx = static_cast<int>(v);
  std::vector<Term> out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    Expo e2 = e;
    e2[idx] = 0;
    out.push_back({e2, c});
  }
  return fromTerms(std::move(out));
}

Poly Poly::subst(Var v, const Poly& value) const {
  if (!dependsOn(v)) return *this;
  auto coeffs = byVar(v);
  int dmax = coeffs.rbegin()->first;
  Poly acc;
  for (int k = dmax; k >= 0; --k) {
    acc = acc * value;
    auto it = coeffs.find(k);
    if (it != coeffs.end()) acc += it->second;
  }
  return acc;
}

Scalar Poly::evalAll(const std::array<Scalar, kNumVars>& vals) const {
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) t *= vals[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::fromStrings(const std::string& re_num, const std::string& re_den,
                           const std::string& im_num, const std::string& im_den) {
  mpq_class re{mpz_class(re_num), mpz_class(re_den)};
  mpq_class im{mpz_class(im_num), mpz_class(im_den)};
  re.canonicalize();
  im.canonicalize();
  return Scalar(std::move(re), std::move(im));
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (im_ == 0) {
    os << re_.get_str();
  } else if (re_ == 0) {
    os << im_.get_str() << "*i";
  } else {
    os << re_.get_str() << (im_ > 0 ? "+" : "") << im_.get_str() << "*i";
  }
  return os.str();
}

std::optional<Poly> Poly::divideExact(const Poly& num, const Poly& den) {
  if (den.isZero()) return std::nullopt;
  if (num.isZero()) return Poly();
  if (den.isConstant()) return num * den.constantValue().inverse();
  Poly rem = num, quot;
  const auto& dl = den.leading();
  while (!rem.isZero()) {
    const auto& rl = rem.leading();
    Expo q{};
    for (int i = 0; i < kNumVars; ++i) {
      int d = rl.first[i] - dl.first[i];
      if (d < 0) return std::nullopt;  // leading monomial not divisible
      q[i] = static_cast<int16_t>(d);
    }
    Poly m = monomial(q, rl.second / dl.second);
    quot += m;
    rem -= m * den;
  }
  return quot;
}

namespace {

// Content of p viewed as a univariate polynomial in v: gcd of the coefficients.
Poly contentWrt(const Poly& p, Var v) {
  Poly c;
  for (auto& [k, coef] : p.byVar(v)) {
    c = Poly::gcd(c, coef);
    if (c.isConstant() && !c.isZero()) return Poly(1);
  }
  return c;
}

// Pseudo-remainder of f by g in variable v.
Poly prem(const Poly& f, const Poly& g, Var v) {
  int df = f.degree(v), dg = g.degree(v);
  if (df < dg) return f;
  Poly lcg = g.coeffOf(v, dg);
  Poly r = f;
  long e = df - dg + 1;
  while (!r.isZero() && r.degree(v) >= dg) {
    int dr = r.degree(v);
    Poly lcr = r.coeffOf(v, dr);
    r = lcg * r - lcr * Poly::var(v, dr - dg) * g;
    --e;
  }
  if (e > 0) r = r * lcg.pow(e);
  return r;
}

bool onlyVariable(const Poly& p, Var v) {
  for (const auto& [e, c] : p.terms())
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0 && i != static_cast<int>(v)) return false;
  return true;
}

// Monic Euclid over the coefficient field; keeps rational heights polynomial.
Poly gcdUnivariate(Poly a, Poly b, Var v) {
  a = a.monicLex();
  b = b.monicLex();
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (!b.isZero()) {
    int dg = b.degree(v);
    Poly r = a;
    while (!r.isZero() && r.degree(v) >= dg) {
      int dr = r.degree(v);
      Scalar lcr = r.coeffOf(v, dr).constantValue();
      r -= Poly::var(v, dr - dg) * b * lcr;  // b is monic in v
    }
    a = std::move(b);
    b = r.isZero() ? Poly() : r.monicLex();
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.isZero()) return b.isZero() ? Poly() : b.monicLex();
  if (b.isZero()) return a.monicLex();
  if (a.isConstant() || b.isConstant()) return Poly(1);

  // Main variable: lowest-index variable occurring in either operand.
  int mv = -1;
  for (int i = 0; i < kNumVars && mv < 0; ++i)
    if (a.degree(static_cast<Var>(i)) > 0 || b.degree(static_cast<Var>(i)) > 0) mv = i;
  Var v = static_cast<Var>(mv);

  if (!a.dependsOn(v)) return gcd(a, contentWrt(b, v));
  if (!b.dependsOn(v)) return gcd(contentWrt(a, v), b);

  if (onlyVariable(a, v) && onlyVariable(b, v)) return gcdUnivariate(a, b, v);

  Poly ca = contentWrt(a, v), cb = contentWrt(b, v);
  Poly cg = gcd(ca, cb);
  Poly pa = *divideExact(a, ca), pb = *divideExact(b, cb);

  // Primitive polynomial remainder sequence; each remainder is stripped of
  // its content and scaled monic to keep coefficient heights in check.
  Poly r0 = pa.monicLex(), r1 = pb.monicLex();
  if (r0.degree(v) < r1.degree(v)) std::swap(r0, r1);
  while (true) {
    Poly r2 = prem(r0, r1, v);
    if (r2.isZero()) break;
    Poly c2 = contentWrt(r2, v);
    r0 = std::move(r1);
    r1 = divideExact(r2, c2)->monicLex();
    if (!r1.dependsOn(v)) return cg.monicLex();
  }
  Poly g = *divideExact(r1, contentWrt(r1, v)) * cg;
  return g.monicLex();
}

Poly Poly::monicLex() const {
  if (isZero()) return *this;
  return *this * leading().second.inverse();
}

std::string Poly::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) {
        os << "*" << kVarNames[i];
        if (e[i] != 1) os << "^" << e[i];
      }
  }
  return os.str();
}

}  // namespace p3::exact
