#include "p3/num/real.hpp"

#include <sstream>

namespace p3::num {

std::string Real::str(size_t digits) const {
  if (digits == 0) digits = static_cast<size_t>(prec() * 0.3010) + 2;
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string m(s);
  mpfr_free_str(s);
  bool neg = !m.empty() && m[0] == '-';
  std::string mant = neg ? m.substr(1) : m;
  std::ostringstream os;
  if (neg) os << "-";
  if (mant.empty()) mant = "0";
  os << mant.substr(0, 1);
  if (mant.size() > 1) os << "." << mant.substr(1);
  os << "e" << (e - 1);
  return os.str();
}

std::string Complex::str(size_t digits) const {
  std::ostringstream os;
  os << re_.str(digits);
  if (!(im_.isZero())) os << (im_.sign() >= 0 ? " + " : " - ") << abs(im_).str(digits) << "i";
  return os.str();
}

Complex expC(const Complex& z) {
  Real e = exp(z.re());
  return Complex(e * cos(z.im()), e * sin(z.im()));
}

Complex logC(const Complex& z) { return Complex(log(absC(z)), argC(z)); }

Complex sqrtC(const Complex& z) {
  // exp(log(z)/2); principal branch.
  if (z.im().isZero() && z.re().sign() >= 0) return Complex::fromReal(sqrt(z.re()));
  return expC(logC(z) / 2);
}

Complex powC(const Complex& z, const Complex& w) { return expC(w * logC(z)); }

Complex powC(const Complex& z, long k) {
  mpfr_prec_t p = z.prec();
  Complex r(Real(1L, p), Real(0L, p));
  if (k == 0) return r;
  Complex b = z;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : k;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  if (k < 0) return Complex(Real(1L, p), Real(0L, p)) / r;
  return r;
}

Complex sinC(const Complex& z) {
  return Complex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

Complex cosC(const Complex& z) {
  return Complex(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im())));
}

Complex sinhC(const Complex& z) {
  return Complex(sinh(z.re()) * cos(z.im()), cosh(z.re()) * sin(z.im()));
}

Complex coshC(const Complex& z) {
  return Complex(cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im()));
}

}  // namespace p3::num
