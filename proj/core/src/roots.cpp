#include "p3/num/roots.hpp"

#include <stdexcept>

namespace p3::num {

RootResult newtonComplex(const std::function<Complex(const Complex&)>& f, const Complex& seed,
                         const Real& tol, int maxIter,
                         const std::function<Complex(const Complex&)>* df) {
  mpfr_prec_t p = seed.prec();
  Complex z = seed;
  Real fmag(p);
  for (int it = 0; it < maxIter; ++it) {
    Complex fz = f(z);
    fmag = absC(fz);
    if (fmag <= tol) return {z, fmag, true, it};
    Complex d(p);
    if (df) {
      d = (*df)(z);
    } else {
      Real scale = absC(z);
      if (scale < 1.0) scale = Real(1L, p);
      Real h = ldexpR(scale, -static_cast<long>(p) / 3);
      Complex hh = Complex(h, Real(0L, p));
      d = (f(z + hh) - f(z - hh)) / (hh * 2);
    }
    if (absC(d).isZero()) break;
    Complex step = fz / d;
    z = z - step;
  }
  Complex fz = f(z);
  fmag = absC(fz);
  return {z, fmag, fmag <= tol, maxIter};
}

RootResult bisectReal(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
                      const Real& tol, int maxIter) {
  mpfr_prec_t p = minPrec(lo, hi);
  Real a = lo, b = hi;
  Real fa = f(a), fb = f(b);
  if (fa.sign() == 0) return {Complex::fromReal(a), abs(fa), true, 0};
  if (fb.sign() == 0) return {Complex::fromReal(b), abs(fb), true, 0};
  if (fa.sign() == fb.sign())
    throw std::domain_error("bisectReal: endpoints do not bracket a sign change");
  Real mid(p), fm(p);
  for (int it = 0; it < maxIter; ++it) {
    mid = (a + b) / 2;
    fm = f(mid);
    if (abs(fm) <= tol || mid == a || mid == b)
      return {Complex::fromReal(mid), abs(fm), abs(fm) <= tol, it};
    if (fm.sign() == fa.sign()) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return {Complex::fromReal(mid), abs(fm), false, maxIter};
}

}  // namespace p3::num
