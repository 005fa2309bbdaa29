#include "p3/num/quadrature.hpp"

#include "p3/num/special.hpp"

#include <cmath>
#include <vector>

namespace p3::num {

namespace {

struct Node {
  Real x;       // abscissa in the integration variable
  Real w;       // weight (map derivative)
};

// Abscissa/weight of the DE maps at parameter t.
// tanh-sinh:  u = tanh(pi/2 sinh t),   w = (pi/2) cosh t / cosh^2(pi/2 sinh t)
// exp-sinh:   u = exp(pi/2 sinh t),    w = u * (pi/2) cosh t
// sinh-sinh:  u = sinh(pi/2 sinh t),   w = cosh(pi/2 sinh t) * (pi/2) cosh t
Node deNode(QuadDomain dom, const Real& t, const Real& halfPi) {
  Real s = halfPi * sinh(t);
  Real dc = halfPi * cosh(t);
  switch (dom) {
    case QuadDomain::finite: {
      Real ch = cosh(s);
      return {tanh(s), dc / (ch * ch)};
    }
    case QuadDomain::half_line: {
      Real u = exp(s);
      return {u, u * dc};
    }
    case QuadDomain::real_line:
    default:
      return {sinh(s), cosh(s) * dc};
  }
}

}  // namespace

QuadResult integrate(const std::function<Complex(const Real&)>& f, QuadDomain dom,
                     const Real& a, const Real& b, const Real& targetError,
                     mpfr_prec_t prec, int maxLevel) {
  mpfr_prec_t wp = prec + 32;
  Real halfPi = constPi(wp) / 2;
  // Affine map for the finite case: x = mid + hw*u.
  Real mid(0L, wp), hw(1L, wp);
  if (dom == QuadDomain::finite) {
    mid = (a + b) / 2;
    hw = (b - a) / 2;
  }
  auto eval = [&](const Real& t) -> Complex {
    Node n = deNode(dom, t, halfPi);
    Complex fx = (dom == QuadDomain::finite) ? f(mid + hw * n.x) : f(n.x);
    return fx * n.w;
  };

  // t-range where DE weights stop mattering at this precision.
  double tmax = std::log(2.0 / 3.141592653589793 *
                         (static_cast<double>(wp) * 0.6931 + 40.0)) + 1.5;
  if (dom != QuadDomain::finite) tmax += 0.7;  // slower decay of the maps

  Real h(1L, wp);
  Complex sum = eval(Real(0.0, wp));
  {
    long n = 1;
    while (static_cast<double>(n) * 1.0 <= tmax) {
      sum += eval(Real(static_cast<double>(n), wp));
      sum += eval(Real(-static_cast<double>(n), wp));
      ++n;
    }
  }
  Complex integral = sum;  // times h=1 later
  Real err = absC(integral);
  Complex prev = integral;
  bool converged = false;
  for (int level = 1; level <= maxLevel; ++level) {
    h = h / 2;
    double hd = std::pow(0.5, level);
    // add midpoints: t = (2k+1) h
    Complex add(Real(0L, wp), Real(0L, wp));
    long kmax = static_cast<long>(std::ceil(tmax / hd / 2.0)) + 1;
    for (long k = 0; k < kmax; ++k) {
      Real t = h * (2 * k + 1);
      if (t.toDouble() > tmax) break;
      add += eval(t);
      add += eval(-t);
    }
    sum += add;
    Complex cur = sum * h;
    err = absC(cur - prev);
    prev = cur;
    if (level >= 2 && err <= targetError) {
      converged = true;
      integral = cur;
      break;
    }
    integral = cur;
  }
  Complex scaled = (dom == QuadDomain::finite) ? integral * hw : integral;
  if (dom == QuadDomain::finite) err = err * abs(hw);
  Real errOut(prec);
  mpfr_set(errOut.raw(), err.raw(), MPFR_RNDN);
  return {Complex(Real(scaled.re(), prec), Real(scaled.im(), prec)), errOut, converged};
}

QuadResult integrateFinite(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, const Real& targetError, mpfr_prec_t prec) {
  return integrate(f, QuadDomain::finite, a, b, targetError, prec);
}

QuadResult integrateHalfLine(const std::function<Complex(const Real&)>& f,
                             const Real& targetError, mpfr_prec_t prec) {
  Real z(0L, prec);
  return integrate(f, QuadDomain::half_line, z, z, targetError, prec);
}

QuadResult integrateRealLine(const std::function<Complex(const Real&)>& f,
                             const Real& targetError, mpfr_prec_t prec) {
  Real z(0L, prec);
  return integrate(f, QuadDomain::real_line, z, z, targetError, prec);
}

}  // namespace p3::num
