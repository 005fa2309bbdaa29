#include "p3/num/eigen.hpp"

#include <algorithm>
#include <stdexcept>

namespace p3::num {

namespace {

// Number of eigenvalues of T strictly below x, by the LDL^T Sturm count.
int sturmCount(const std::vector<Real>& d, const std::vector<Real>& e, const Real& x,
               mpfr_prec_t wp) {
  const size_t n = d.size();
  int count = 0;
  Real q = d[0] - x;
  Real tiny = ldexpR(Real(1L, wp), -2 * static_cast<long>(wp));
  if (q.sign() < 0) ++count;
  for (size_t i = 1; i < n; ++i) {
    if (q.isZero()) q = tiny;
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q.sign() < 0) ++count;
  }
  return count;
}

// Inverse iteration for the eigenvector at shift lambda; returns the residual
// |T v - lambda v| / |v|.
Real inverseIterationResidual(const std::vector<Real>& d, const std::vector<Real>& e,
                              const Real& lambda, mpfr_prec_t wp) {
  const size_t n = d.size();
  // Perturb the shift a hair off the eigenvalue so the solve stays regular.
  Real shift = lambda + ldexpR(abs(lambda) + Real(1L, wp), -static_cast<long>(wp) + 8);
  std::vector<Real> v(n, Real(1L, wp));
  for (int pass = 0; pass < 2; ++pass) {
    // Solve (T - shift I) w = v by the Thomas algorithm with a regularized pivot.
    std::vector<Real> c(n, Real(0L, wp)), rhs = v;
    Real tiny = ldexpR(Real(1L, wp), -2 * static_cast<long>(wp));
    Real b0 = d[0] - shift;
    if (b0.isZero()) b0 = tiny;
    c[0] = (n > 1) ? e[0] / b0 : Real(0L, wp);
    rhs[0] = rhs[0] / b0;
    for (size_t i = 1; i < n; ++i) {
      Real m = d[i] - shift - e[i - 1] * c[i - 1];
      if (m.isZero()) m = tiny;
      if (i < n - 1) c[i] = e[i] / m;
      rhs[i] = (rhs[i] - e[i - 1] * rhs[i - 1]) / m;
    }
    for (size_t i = n - 1; i-- > 0;) rhs[i] = rhs[i] - c[i] * rhs[i + 1];
    // Normalize.
    Real norm(0L, wp);
    for (auto& x : rhs) norm += x * x;
    norm = sqrt(norm);
    for (auto& x : rhs) x = x / norm;
    v = rhs;
  }
  // Residual.
  Real res(0L, wp);
  for (size_t i = 0; i < n; ++i) {
    Real r = d[i] * v[i] - lambda * v[i];
    if (i > 0) r += e[i - 1] * v[i - 1];
    if (i + 1 < n) r += e[i] * v[i + 1];
    res += r * r;
  }
  return sqrt(res);
}

}  // namespace

EigenResult tridiagLowestEigenvalues(const std::vector<Real>& d, const std::vector<Real>& e,
                                     int count) {
  if (d.empty()) throw std::domain_error("tridiagLowestEigenvalues: empty matrix");
  if (e.size() + 1 != d.size()) throw std::domain_error("tridiag: off-diagonal size mismatch");
  const mpfr_prec_t wp = d[0].prec();
  const size_t n = d.size();
  count = std::min<int>(count, static_cast<int>(n));

  // Gershgorin bounds.
  Real lo = d[0], hi = d[0];
  for (size_t i = 0; i < n; ++i) {
    Real radius(0L, wp);
    if (i > 0) radius += abs(e[i - 1]);
    if (i + 1 < n) radius += abs(e[i]);
    lo = std::min(lo, d[i] - radius, [](const Real& a, const Real& b) { return a < b; });
    hi = std::max(hi, d[i] + radius, [](const Real& a, const Real& b) { return a < b; });
  }
  Real span = hi - lo;
  if (span.isZero()) span = Real(1L, wp);

  EigenResult out;
  out.maxResidual = Real(0L, wp);
  for (int k = 0; k < count; ++k) {
    // Bisection for the (k+1)-th smallest eigenvalue.
    Real a = lo, b = hi;
    long iters = 3 * static_cast<long>(wp) / 2 + 64;
    for (long it = 0; it < iters; ++it) {
      Real mid = (a + b) / 2;
      if (mid == a || mid == b) break;
      if (sturmCount(d, e, mid, wp) >= k + 1)
        b = mid;
      else
        a = mid;
    }
    Real lambda = (a + b) / 2;
    out.values.push_back(lambda);
    Real res = inverseIterationResidual(d, e, lambda, wp);
    if (res > out.maxResidual) out.maxResidual = res;
  }
  return out;
}

EigenResult symLowestEigenvalues(const std::vector<std::vector<Real>>& a0, int count) {
  // Householder reduction to symmetric tridiagonal form, then bisection.
  auto a = a0;
  const size_t n = a.size();
  if (n == 0) throw std::domain_error("symLowestEigenvalues: empty matrix");
  const mpfr_prec_t wp = a[0][0].prec();
  std::vector<Real> d(n, Real(0L, wp)), e(n > 1 ? n - 1 : 0, Real(0L, wp));
  for (size_t k = 0; k + 2 < n; ++k) {
    // Householder vector to annihilate a[k+2..][k].
    Real alpha(0L, wp);
    for (size_t i = k + 1; i < n; ++i) alpha += a[i][k] * a[i][k];
    alpha = sqrt(alpha);
    if (a[k + 1][k].sign() > 0) alpha = -alpha;
    Real r2 = (alpha * alpha - a[k + 1][k] * alpha) * 2;
    if (r2.isZero()) continue;
    std::vector<Real> v(n, Real(0L, wp));
    v[k + 1] = a[k + 1][k] - alpha;
    for (size_t i = k + 2; i < n; ++i) v[i] = a[i][k];
    Real r = sqrt(r2);
    for (auto& x : v) x = (x * sqrt(Real(2L, wp))) / r;
    // A <- (I - v v^T/?) standard: with u normalized so |u|^2 = 2: A' = A - u w^T - w u^T
    // w = A u - (u^T A u / 2) u
    std::vector<Real> Au(n, Real(0L, wp));
    for (size_t i = 0; i < n; ++i) {
      Real s(0L, wp);
      for (size_t j = 0; j < n; ++j) s += a[i][j] * v[j];
      Au[i] = s;
    }
    Real uAu(0L, wp);
    for (size_t i = 0; i < n; ++i) uAu += v[i] * Au[i];
    std::vector<Real> w(n, Real(0L, wp));
    for (size_t i = 0; i < n; ++i) w[i] = Au[i] - v[i] * (uAu / 2);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - v[i] * w[j] - w[i] * v[j];
  }
  for (size_t i = 0; i < n; ++i) d[i] = a[i][i];
  for (size_t i = 0; i + 1 < n; ++i) e[i] = a[i + 1][i];
  return tridiagLowestEigenvalues(d, e, count);
}

}  // namespace p3::num
