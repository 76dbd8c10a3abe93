#pragma once

// Fraction-free determinant (Bareiss). Every division is exact, so with an
// arbitrary-precision integer scalar the result is exact; intermediate
// entries stay bounded by minors of the input instead of exploding the way
// naive integer elimination does.

#include <stdexcept>

#include <Eigen/Core>

#include "k3orb/arith.hpp"

namespace k3orb {

template <typename Derived>
typename Derived::Scalar bareiss_determinant(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");

  const Index n = a.rows();
  if (n == 0) return Scalar(1);

  Matrix m = a;
  Scalar prev(1);
  int sign = 1;

  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return sign < 0 ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

}  // namespace k3orb
