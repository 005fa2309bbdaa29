#include <stdexcept>

#include "p3/num/special.hpp"

namespace p3::num {

namespace {

Complex one(mpfr_prec_t p) { return Complex(Real(1L, p), Real(0L, p)); }

// Direct power series, |z| safely below 1.
Complex dilogSeries(const Complex& z) {
  mpfr_prec_t wp = z.prec();
  Complex acc(Real(0L, wp), Real(0L, wp));
  Complex zpow = z;
  for (unsigned long n = 1;; ++n) {
    Complex term = zpow / Real(mpq_class(n) * mpq_class(n), wp);
    acc += term;
    if (magnitude2(absC(term)) < magnitude2(absC(acc)) - static_cast<long>(wp) - 8) break;
    if (n > 64 * static_cast<unsigned long>(wp))
      throw std::domain_error("dilog: series did not converge");
    zpow = zpow * z;
  }
  return acc;
}

// Li2(z) = sum_{n>=0} B_n u^{n+1} / ((n+1) n!),  u = -log(1-z), |u| < 2 pi.
Complex dilogBernoulli(const Complex& u) {
  mpfr_prec_t wp = u.prec();
  const auto& bern = bernoulliEven(4 * static_cast<size_t>(wp));
  // n = 0 term: u; n = 1 term: B_1 u^2/2/1! = -u^2/4.
  Complex acc = u - u * u / 4;
  Complex u2 = u * u;
  Complex upow = u;  // u^(n+1) for even n starting n=2
  for (size_t k = 1; k < bern.size(); ++k) {
    size_t n = 2 * k;
    upow = upow * u2;
    // (n+1) * n!
    mpz_class fact = 1;
    for (size_t j = 2; j <= n; ++j) fact *= j;
    fact *= (n + 1);
    Complex term = upow * Real(bern[k] / mpq_class(fact), wp);
    acc += term;
    if (magnitude2(absC(term)) < magnitude2(absC(acc)) - static_cast<long>(wp) - 8) return acc;
  }
  throw std::domain_error("dilog: log-series did not converge");
}

}  // namespace

Complex dilog(const Complex& z) {
  mpfr_prec_t p = z.prec();
  mpfr_prec_t wp = p + 64;
  if (z.im().isZero() && z.re() > 1.0)
    throw std::domain_error("dilog: argument on the branch cut [1, inf)");
  Complex zz(Real(z.re(), wp), Real(z.im(), wp));
  Real pi = constPi(wp);
  Complex pi2over6 = Complex(pi * pi / 6, Real(0L, wp));

  Complex acc(Real(0L, wp), Real(0L, wp));
  Real az = absC(zz);
  if (az.isZero()) {
    acc = Complex(Real(0L, wp), Real(0L, wp));
  } else if (az < 0.5) {
    acc = dilogSeries(zz);
  } else if (absC(zz - one(wp)) < 0.25) {
    // Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
    Complex w = one(wp) - zz;
    Complex li = w.isZero() ? Complex(Real(0L, wp), Real(0L, wp)) : dilogSeries(w);
    Complex cross = w.isZero() ? Complex(Real(0L, wp), Real(0L, wp)) : logC(zz) * logC(w);
    acc = pi2over6 - cross - li;
  } else if (az > 2.0) {
    // Inversion: Li2(z) = -Li2(1/z) - pi^2/6 - log(-z)^2 / 2
    Complex inv = one(wp) / zz;
    Complex lm = logC(-zz);
    acc = -dilog(Complex(Real(inv.re(), wp - 32), Real(inv.im(), wp - 32)));
    acc = Complex(Real(acc.re(), wp), Real(acc.im(), wp)) - pi2over6 - lm * lm / 2;
  } else {
    Complex u = -logC(one(wp) - zz);
    acc = dilogBernoulli(u);
  }
  return Complex(Real(acc.re(), p), Real(acc.im(), p));
}

}  // namespace p3::num
