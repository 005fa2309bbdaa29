#pragma once

#include <functional>

#include "p3/num/real.hpp"

namespace p3::num {

struct RootResult {
  Complex root;
  Real residual;  // |f(root)|
  bool converged;
  int iterations;
};

// Complex Newton from a seed; derivative by central difference unless given.
RootResult newtonComplex(const std::function<Complex(const Complex&)>& f, const Complex& seed,
                         const Real& tol, int maxIter = 64,
                         const std::function<Complex(const Complex&)>* df = nullptr);

// Real bisection on a sign-changing bracket.
RootResult bisectReal(const std::function<Real(const Real&)>& f, const Real& lo, const Real& hi,
                      const Real& tol, int maxIter = 100000);

}  // namespace p3::num
