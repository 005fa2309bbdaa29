#include <cmath>
#include <stdexcept>

#include "p3/num/special.hpp"

namespace p3::num {

namespace {

// Ascending series. K0 = -(log(x/2)+gamma) I0 + sum_{k>=1} H_k u^k/(k!)^2,
// K1 = 1/x + (log(x/2)+gamma) I1 - x/4 * sum_{k>=0} (H_k + H_{k+1}) u^k/(k!(k+1)!),
// with u = x^2/4. Cancellation costs roughly 3|x| bits, absorbed in wp.
Complex besselKSeries(int order, const Complex& x, mpfr_prec_t outPrec) {
  double ax = absC(x).toDouble();
  mpfr_prec_t wp = outPrec + 64 + static_cast<mpfr_prec_t>(3.0 * ax);
  Complex xx(Real(x.re(), wp), Real(x.im(), wp));
  Complex u = xx * xx / 4;
  Complex L = logC(xx / 2) + Complex(constEulerGamma(wp), Real(0L, wp));

  Complex i0(Real(1L, wp), Real(0L, wp));
  Complex i1(Real(0L, wp), Real(0L, wp));   // I1 * (2/x) accumulated as sum u^k/(k!(k+1)!)
  Complex s0(Real(0L, wp), Real(0L, wp));   // sum H_k u^k/(k!)^2
  Complex s1(Real(0L, wp), Real(0L, wp));   // sum (H_k + H_{k+1}) u^k/(k!(k+1)!)
  Real hk(0L, wp);
  Complex upow(Real(1L, wp), Real(0L, wp));
  mpz_class kfact = 1;
  for (unsigned long k = 0;; ++k) {
    if (k > 0) {
      upow = upow * u;
      kfact *= k;
      hk += Real(mpq_class(1, k), wp);
    }
    mpz_class k1fact = kfact * (k + 1);
    Real invk2(mpq_class(mpz_class(1), kfact * kfact), wp);
    Real invkk1(mpq_class(mpz_class(1), k1fact * kfact), wp);
    Complex t0 = upow * invk2;
    Complex t1 = upow * invkk1;
    i0 += (k == 0 ? Complex(Real(0L, wp), Real(0L, wp)) : t0);
    i1 += t1;
    s0 += t0 * hk;
    Real hk1 = hk + Real(mpq_class(1, k + 1), wp);
    s1 += t1 * (hk + hk1);
    if (k > 2 && magnitude2(absC(t0)) < -static_cast<long>(wp) - 8 + magnitude2(absC(i0)))
      break;
    if (k > 16 * static_cast<unsigned long>(wp) + 64)
      throw std::domain_error("besselK: series did not converge");
  }
  Complex r(Real(0L, wp), Real(0L, wp));
  if (order == 0) {
    r = -(L * i0) + s0;
  } else {
    Complex i1full = i1 * (xx / 2);
    r = Complex(Real(1L, wp), Real(0L, wp)) / xx + L * i1full - (xx / 4) * s1;
  }
  return Complex(Real(r.re(), outPrec), Real(r.im(), outPrec));
}

// Large-argument expansion K_nu(x) ~ sqrt(pi/(2x)) e^{-x} sum a_k(nu)/x^k.
// Returns nullopt-like failure by throwing; caller falls back to the series.
Complex besselKAsymptotic(int order, const Complex& x, mpfr_prec_t outPrec) {
  mpfr_prec_t wp = outPrec + 32;
  Complex xx(Real(x.re(), wp), Real(x.im(), wp));
  long nu2 = 4 * order * order;
  Complex acc(Real(1L, wp), Real(0L, wp));
  Complex term(Real(1L, wp), Real(0L, wp));
  Complex inv8x = Complex(Real(1L, wp), Real(0L, wp)) / (xx * 8);
  long prevMag = 1L << 30;
  for (long k = 1;; ++k) {
    long num = nu2 - (2 * k - 1) * (2 * k - 1);
    term = term * inv8x * Real(mpq_class(num, k), wp);
    long mag = magnitude2(absC(term));
    if (mag >= prevMag)
      throw std::domain_error("besselK: asymptotic tail bottomed out above target");
    acc += term;
    if (mag < -static_cast<long>(outPrec) - 16) break;
    prevMag = mag;
  }
  Complex pref = sqrtC(Complex(constPi(wp), Real(0L, wp)) / (xx * 2)) * expC(-xx);
  Complex r = pref * acc;
  return Complex(Real(r.re(), outPrec), Real(r.im(), outPrec));
}

}  // namespace

Complex besselK(int order, const Complex& x) {
  if (order != 0 && order != 1) throw std::domain_error("besselK: order must be 0 or 1");
  if (!(x.re() > 0.0)) throw std::domain_error("besselK: requires Re x > 0");
  mpfr_prec_t p = x.prec();
  double ax = absC(x).toDouble();
  // The asymptotic floor is ~ e^{-2|x|}; usable when 2|x| log2(e) comfortably
  // exceeds the requested precision.
  if (2.885 * ax > static_cast<double>(p) + 48) {
    try {
      return besselKAsymptotic(order, x, p);
    } catch (const std::domain_error&) {
    }
  }
  return besselKSeries(order, x, p);
}

}  // namespace p3::num
