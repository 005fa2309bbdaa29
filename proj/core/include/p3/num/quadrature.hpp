#pragma once

#include <functional>

#include "p3/num/real.hpp"

namespace p3::num {

enum class QuadDomain { finite, half_line, real_line };

struct QuadResult {
  Complex value;
  Real error;      // achieved estimate
  bool converged;  // estimate <= target
};

// Double-exponential quadrature. finite uses tanh-sinh on (a, b); half_line
// uses exp-sinh on (0, inf); real_line uses sinh-sinh. The integrand must be
// smooth on the open domain and decay (or be regularized by the DE map) at
// the ends.
QuadResult integrate(const std::function<Complex(const Real&)>& f, QuadDomain dom,
                     const Real& a, const Real& b, const Real& targetError,
                     mpfr_prec_t prec, int maxLevel = 11);

QuadResult integrateFinite(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, const Real& targetError, mpfr_prec_t prec);
QuadResult integrateHalfLine(const std::function<Complex(const Real&)>& f,
                             const Real& targetError, mpfr_prec_t prec);
QuadResult integrateRealLine(const std::function<Complex(const Real&)>& f,
                             const Real& targetError, mpfr_prec_t prec);

}  // namespace p3::num
