#pragma once

#include <vector>

#include "p3/num/real.hpp"

namespace p3::num {

struct EigenResult {
  std::vector<Real> values;   // ascending
  Real maxResidual;           // max over returned pairs of |A v - lambda v|
};

// Lowest `count` eigenvalues of a symmetric tridiagonal matrix (diag d,
// off-diagonal e, sizes n and n-1) by Sturm bisection, with residuals from
// inverse iteration.
EigenResult tridiagLowestEigenvalues(const std::vector<Real>& d, const std::vector<Real>& e,
                                     int count);

// Dense symmetric path: Householder reduction to tridiagonal, then bisection.
EigenResult symLowestEigenvalues(const std::vector<std::vector<Real>>& a, int count);

}  // namespace p3::num
