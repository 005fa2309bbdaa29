#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "p3/num/special.hpp"

namespace p3::num {

namespace {

std::mutex g_cacheMutex;

Real cachedConst(int key, mpfr_prec_t p, Real (*make)(mpfr_prec_t)) {
  static std::map<std::pair<int, mpfr_prec_t>, Real> cache;
  std::lock_guard<std::mutex> lk(g_cacheMutex);
  auto it = cache.find({key, p});
  if (it != cache.end()) return it->second;
  Real v = make(p);
  cache.emplace(std::make_pair(key, p), v);
  return v;
}

Real makeLog2(mpfr_prec_t p) {
  Real r(p);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

// zeta'(2) by Euler-Maclaurin on f(x) = log(x)/x^2.
Real makeZetaPrime2(mpfr_prec_t p) {
  mpfr_prec_t wp = p + 64;
  long N = std::max<long>(64, p / 2);
  Real s(0L, wp);
  for (long n = 2; n < N; ++n) {
    Real x(n, wp);
    s += log(x) / (x * x);
  }
  Real xN(N, wp);
  Real logN = log(xN);
  // integral tail: (log N + 1)/N, plus f(N)/2
  s += (logN + Real(1L, wp)) / xN + logN / (xN * xN) / 2;
  // derivative corrections: f^(2k-1)(N) with f^(m) = (a log x + b)/x^(m+2)
  const auto& bern = bernoulliEven(2 * 64);
  Real a(1L, wp), b(0L, wp);
  long pw = 2;
  Real xpow = xN * xN;  // x^(m+2) at m=0
  for (long k = 1; k <= 60; ++k) {
    // advance derivative order m -> m+1 twice to reach 2k-1
    for (int step = 0; step < (k == 1 ? 1 : 2); ++step) {
      Real na = -(a * pw);
      Real nb = a - b * pw;
      a = na;
      b = nb;
      ++pw;
      xpow *= xN;
    }
    Real deriv = (a * logN + b) / xpow;
    Real term = Real(bern[k], wp) * deriv;
    // divide by (2k)!
    mpz_class fact = 1;
    for (long j = 2; j <= 2 * k; ++j) fact *= j;
    term = term / Real(mpq_class(fact), wp);
    s -= term;
    if (magnitude2(term) < -(wp + 8)) break;
  }
  Real r(p);
  mpfr_neg(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

Real makeLogA(mpfr_prec_t p) {
  mpfr_prec_t wp = p + 32;
  Real zp2 = makeZetaPrime2(wp);
  Real pi = Real::pi(wp);
  Real gamma = Real::eulerGamma(wp);
  Real log2pi = log(pi * 2);
  // zeta'(-1) = (1 - gamma - log(2 pi) + 6 zeta'(2)/pi^2) / 12
  Real zpm1 = (Real(1L, wp) - gamma - log2pi + zp2 * 6 / (pi * pi)) / 12;
  Real logA = Real(mpq_class(1, 12), wp) - zpm1;
  Real r(p);
  mpfr_set(r.raw(), logA.raw(), MPFR_RNDN);
  return r;
}

bool isNonPositiveIntegerReal(const Complex& z) {
  return z.im().isZero() && z.re().isInteger() && z.re().sign() <= 0;
}

}  // namespace

static Complex lnBarnesGAsymptoticImplPrec(const Complex& zz, mpfr_prec_t wp);

Real constPi(mpfr_prec_t p) { return cachedConst(0, p, &Real::pi); }
Real constEulerGamma(mpfr_prec_t p) { return cachedConst(1, p, &Real::eulerGamma); }
Real constLog2(mpfr_prec_t p) { return cachedConst(2, p, &makeLog2); }
Real constLogA(mpfr_prec_t p) { return cachedConst(3, p, &makeLogA); }

const std::vector<mpq_class>& bernoulliEven(size_t maxIndex) {
  static std::vector<mpq_class> table;  // table[k] = B_{2k}
  static std::mutex m;
  std::lock_guard<std::mutex> lk(m);
  size_t need = maxIndex / 2 + 1;
  if (table.size() >= need) return table;
  // Recurrence over all B_n, keeping even entries.
  static std::vector<mpq_class> all;  // all Bernoulli numbers B_0..B_n
  if (all.empty()) all = {mpq_class(1)};
  size_t targetN = 2 * need + 2;
  while (all.size() < targetN) {
    size_t n = all.size();
    // sum_{k=0}^{n} C(n+1,k) B_k = 0  =>  B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k
    mpq_class s = 0;
    mpz_class binom = 1;  // C(n+1, 0)
    for (size_t k = 0; k < n; ++k) {
      s += mpq_class(binom) * all[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    mpq_class bn = -s / mpq_class(n + 1);
    bn.canonicalize();
    all.push_back(bn);
  }
  table.clear();
  for (size_t k = 0; k < need; ++k) table.push_back(all[2 * k]);
  return table;
}

Complex lnGamma(const Complex& z) {
  mpfr_prec_t p = z.prec();
  mpfr_prec_t wp = p + 64;
  if (isNonPositiveIntegerReal(z)) throw std::domain_error("lnGamma: pole");
  Complex zz(Real(z.re(), wp), Real(z.im(), wp));

  // Shift until the Stirling tail converges below target precision.
  double targetRe = 0.125 * static_cast<double>(wp) + 10.0;
  long m = 0;
  double re = zz.re().toDouble();
  double im = std::abs(zz.im().toDouble());
  if (std::hypot(re, im) < targetRe || re < 2) {
    m = static_cast<long>(std::ceil(targetRe - re)) + 1;
    if (m < 0) m = 0;
  }
  Complex w = zz + Complex(Real(m, wp), Real(0L, wp));

  // Stirling: (w - 1/2) log w - w + log(2 pi)/2 + sum B_2k / (2k(2k-1) w^(2k-1))
  Complex logw = logC(w);
  Complex acc = (w - Complex(Real(mpq_class(1, 2), wp), Real(0L, wp))) * logw - w;
  Real log2pi = log(constPi(wp) * 2);
  acc += Complex(log2pi / 2, Real(0L, wp));
  Complex w2 = w * w;
  Complex invw = Complex(Real(1L, wp), Real(0L, wp)) / w;
  Complex wpow = invw;  // w^{-(2k-1)}
  const auto& bern = bernoulliEven(2 * static_cast<size_t>(wp));
  long prevMag = 1L << 30;
  for (size_t k = 1; k < bern.size(); ++k) {
    Complex term = wpow * Real(bern[k] / mpq_class((2 * k) * (2 * k - 1)), wp);
    acc += term;
    long mag = magnitude2(absC(term));
    if (mag < magnitude2(absC(acc)) - static_cast<long>(wp) - 8) break;
    if (mag > prevMag) throw std::domain_error("lnGamma: Stirling tail diverging");
    prevMag = mag;
    wpow = wpow * invw * invw;
  }
  // Undo the shift: lnGamma(z) = lnGamma(z+m) - sum log(z+j)
  for (long j = 0; j < m; ++j) acc -= logC(zz + Complex(Real(j, wp), Real(0L, wp)));
  return Complex(Real(acc.re(), p), Real(acc.im(), p));
}

Complex gammaC(const Complex& z) {
  if (z.im().isZero() && z.re().sign() > 0) {
    Real r(z.prec());
    mpfr_gamma(r.raw(), z.re().raw(), MPFR_RNDN);
    return Complex::fromReal(r);
  }
  return expC(lnGamma(z));
}

namespace {

// log G(1+u) Taylor series, |u| <= ~0.6:
// (u/2) log(2 pi) - u(u+1)/2 - gamma u^2/2 + sum_{k>=2} (-1)^(k+1) zeta(k) u^(k+1)/(k+1)
Complex lnBarnesTaylor(const Complex& u) {
  mpfr_prec_t wp = u.prec();
  Real log2pi = log(constPi(wp) * 2);
  Complex acc = u * Real(log2pi / 2) - u * (u + Complex(Real(1L, wp), Real(0L, wp))) / 2 -
                u * u * Real(constEulerGamma(wp) / 2);
  Complex upow = u * u;  // u^k starting k=2
  long sign = -1;
  for (unsigned long k = 2;; ++k) {
    upow = upow * u;  // u^(k+1)
    Complex term = upow * Real(zetaUi(k, wp) / mpq_class(k + 1), wp);
    if (sign < 0) acc += term; else acc -= term;
    sign = -sign;
    if (magnitude2(absC(term)) < magnitude2(absC(acc)) - static_cast<long>(wp) - 8) break;
    if (k > 4 * static_cast<unsigned long>(wp)) throw std::domain_error("lnBarnesTaylor: no convergence");
  }
  return acc;
}

// DLMF large-argument form for log G(z+1).
Complex lnBarnesAsympt(const Complex& z) {
  mpfr_prec_t wp = z.prec();
  Complex logz = logC(z);
  Complex lgam = lnGamma(z + Complex(Real(1L, wp), Real(0L, wp)));
  Complex acc = z * z / 4 + z * lgam -
                (z * (z + Complex(Real(1L, wp), Real(0L, wp))) / 2 +
                 Complex(Real(mpq_class(1, 12), wp), Real(0L, wp))) * logz -
                Complex(constLogA(wp), Real(0L, wp));
  const auto& bern = bernoulliEven(2 * static_cast<size_t>(wp));
  Complex invz2 = Complex(Real(1L, wp), Real(0L, wp)) / (z * z);
  Complex zpow = invz2;
  long prevMag = 1L << 30;
  for (size_t k = 1; k + 1 < bern.size(); ++k) {
    mpq_class c = bern[k + 1] / mpq_class((2 * k) * (2 * k + 1) * (2 * k + 2));
    Complex term = zpow * Real(c, wp);
    acc += term;
    long mag = magnitude2(absC(term));
    if (mag < magnitude2(absC(acc)) - static_cast<long>(wp) - 8) break;
    if (mag > prevMag) throw std::domain_error("lnBarnesAsympt: tail diverging");
    prevMag = mag;
    zpow = zpow * invz2;
  }
  return acc;
}

}  // namespace

Complex lnBarnesG(const Complex& z) {
  mpfr_prec_t p = z.prec();
  mpfr_prec_t wp = p + 96;
  if (isNonPositiveIntegerReal(z)) throw std::domain_error("lnBarnesG: zero of G");
  Complex zz(Real(z.re(), wp), Real(z.im(), wp));
  double im = std::abs(zz.im().toDouble());
  Complex acc(Real(0L, wp), Real(0L, wp));
  if (im <= 0.55) {
    // Ladder into the Taylor window around 1: G(x) = G(x+1)/Gamma(x).
    double re = zz.re().toDouble();
    long n = std::lround(1.0 - re);
    Complex x = zz;
    for (long j = 0; j < n; ++j) {  // move up: log G(x) = log G(x+1) - lnGamma(x)
      acc -= lnGamma(x);
      x = x + Complex(Real(1L, wp), Real(0L, wp));
    }
    for (long j = 0; j < -n; ++j) {  // move down: log G(x) = log G(x-1) + lnGamma(x-1)
      x = x - Complex(Real(1L, wp), Real(0L, wp));
      acc += lnGamma(x);
    }
    acc += lnBarnesTaylor(x - Complex(Real(1L, wp), Real(0L, wp)));
  } else {
    acc = lnBarnesGAsymptoticImplPrec(zz, wp);
  }
  return Complex(Real(acc.re(), p), Real(acc.im(), p));
}

// Helper shared with the public asymptotic entry point.
static Complex lnBarnesGAsymptoticImplPrec(const Complex& zz, mpfr_prec_t wp) {
  double targetAbs = 0.17 * static_cast<double>(wp) + 12.0;
  double re = zz.re().toDouble();
  long m = 0;
  if (std::hypot(re, zz.im().toDouble()) < targetAbs || re < 2)
    m = static_cast<long>(std::ceil(targetAbs - re)) + 1;
  if (m < 0) m = 0;
  // log G(z) = log G(z+m) - sum_{j=0}^{m-1} lnGamma(z+j)
  Complex acc = lnBarnesAsympt(zz + Complex(Real(m - 1, wp), Real(0L, wp)));
  for (long j = 0; j < m; ++j) acc -= lnGamma(zz + Complex(Real(j, wp), Real(0L, wp)));
  return acc;
}

Complex lnBarnesGAsymptotic(const Complex& z) {
  mpfr_prec_t p = z.prec();
  mpfr_prec_t wp = p + 96;
  Complex zz(Real(z.re(), wp), Real(z.im(), wp));
  Complex acc = lnBarnesGAsymptoticImplPrec(zz, wp);
  return Complex(Real(acc.re(), p), Real(acc.im(), p));
}

Complex barnesG(const Complex& z) {
  if (isNonPositiveIntegerReal(z)) return Complex(Real(0L, z.prec()), Real(0L, z.prec()));
  return expC(lnBarnesG(z));
}

Complex evalPoly(const p3::exact::Poly& p, const std::array<Complex, p3::exact::kNumVars>& vals,
                 mpfr_prec_t prec) {
  Complex acc(Real(0L, prec), Real(0L, prec));
  for (const auto& [e, c] : p.terms()) {
    Complex t = Complex::fromScalar(c, prec);
    for (int i = 0; i < p3::exact::kNumVars; ++i)
      if (e[i] != 0) t = t * powC(vals[i], e[i]);
    acc += t;
  }
  return acc;
}

Complex evalRatFunc(const p3::exact::RatFunc& f,
                    const std::array<Complex, p3::exact::kNumVars>& vals, mpfr_prec_t prec) {
  return evalPoly(f.num(), vals, prec) / evalPoly(f.den(), vals, prec);
}

}  // namespace p3::num
