#pragma once

#include <stdexcept>

namespace p3::exact {

// 2x2 matrix over a commutative ring R. R needs +, -, *, and a free function
// ringInverse(R) for the entries appearing in inversions.
template <class R>
struct Mat2 {
  R a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(const R& one, const R& zero) { return {one, zero, zero, one}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(const R& s) const { return {a * s, b * s, c * s, d * s}; }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }

  R det() const { return a * d - b * c; }
  R trace() const { return a + d; }

  Mat2 inverse() const {
    R di = ringInverse(det());
    return {d * di, (-b) * di, (-c) * di, a * di};
  }
};

}  // namespace p3::exact
