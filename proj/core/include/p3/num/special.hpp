#pragma once

#include <array>
#include <vector>

#include "p3/exact/ratfunc.hpp"
#include "p3/num/real.hpp"

namespace p3::num {

// Principal-branch log Gamma via Stirling with argument shifting.
// Throws std::domain_error at non-positive-integer real arguments.
Complex lnGamma(const Complex& z);
Complex gammaC(const Complex& z);

// Barnes G. Non-positive-integer real arguments are exact zeros of G; they
// return a true zero. Dispatches between the Taylor window around 1 and the
// large-argument expansion, both reachable by the G(x+1) = Gamma(x) G(x)
// ladder.
Complex barnesG(const Complex& z);
Complex lnBarnesG(const Complex& z);
// Large-argument route, exposed for the representation cross-check.
Complex lnBarnesGAsymptotic(const Complex& z);

// Dilogarithm, principal branch, cut along [1, inf). Evaluation on the cut
// is rejected.
Complex dilog(const Complex& z);

// Modified Bessel K0/K1 for Re x > 0.
Complex besselK(int order, const Complex& x);

// Cached constants at a given precision.
Real constPi(mpfr_prec_t p);
Real constEulerGamma(mpfr_prec_t p);
Real constLog2(mpfr_prec_t p);
Real constLogA(mpfr_prec_t p);  // Glaisher: log A = 1/12 - zeta'(-1)

// Exact Bernoulli numbers B_0..B_n (even index table; B_1 = -1/2 by the
// usual convention but only even ones are used here).
const std::vector<mpq_class>& bernoulliEven(size_t maxIndex);

// Evaluate exact coefficients at numeric points. vals indexed by Var.
Complex evalPoly(const p3::exact::Poly& p, const std::array<Complex, p3::exact::kNumVars>& vals,
                 mpfr_prec_t prec);
Complex evalRatFunc(const p3::exact::RatFunc& f,
                    const std::array<Complex, p3::exact::kNumVars>& vals, mpfr_prec_t prec);

}  // namespace p3::num
