#pragma once

// Smith normal form over Z: for integer A find unimodular u, v with
// u * A * v = d diagonal, d(0,0) | d(1,1) | ... Pivoting always picks the
// entry of least absolute value in the trailing block, which keeps
// coefficient growth tame and makes every reduction round strictly shrink
// the pivot until it divides everything it must.

#include <algorithm>
#include <vector>

#include <Eigen/Core>

#include "k3orb/arith.hpp"

namespace k3orb {

template <typename Scalar>
struct SnfDecomposition {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix d;  // diagonal, same shape as the input
  Matrix u;  // unimodular row transform
  Matrix v;  // unimodular column transform, u * a * v == d

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const Index n = std::min(d.rows(), d.cols());
    out.reserve(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) out.push_back(d(k, k));
    return out;
  }
};

namespace detail {

template <typename Scalar>
bool abs_less(const Scalar& x, const Scalar& y) {
  using std::abs;
  return abs(x) < abs(y);
}

}  // namespace detail

template <typename Derived>
SnfDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  const Index rows = a.rows();
  const Index cols = a.cols();

  SnfDecomposition<Scalar> snf;
  snf.d = a;
  snf.u = Matrix::Identity(rows, rows);
  snf.v = Matrix::Identity(cols, cols);

  Matrix& d = snf.d;
  Matrix& u = snf.u;
  Matrix& v = snf.v;

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      // Least-|entry| pivot over the trailing block.
      Index pi = -1, pj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          if (pi < 0 || detail::abs_less(d(i, j), d(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) return snf;  // trailing block is zero, diagonal stays 0

      if (pi != t) {
        d.row(t).swap(d.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        d.col(t).swap(d.col(pj));
        v.col(t).swap(v.col(pj));
      }

      // Clear the pivot column and row with truncated division; remainders
      // stay behind and become the next, strictly smaller pivot.
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Scalar q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row(i) -= q * d.row(t);
          u.row(i) -= q * u.row(t);
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Scalar q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col(j) -= q * d.col(t);
          v.col(j) -= q * v.col(t);
        }
      }

      bool clean = true;
      for (Index i = t + 1; i < rows && clean; ++i) clean = d(i, t) == 0;
      for (Index j = t + 1; j < cols && clean; ++j) clean = d(t, j) == 0;
      if (!clean) continue;

      // Divisibility fix-up: a trailing entry the pivot does not divide is
      // folded into the pivot row, where the next round grinds it down.
      Index bi = -1, bj = -1;
      for (Index i = t + 1; i < rows && bi < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      d.row(t) += d.row(bi);
      u.row(t) += u.row(bi);
    }

    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return snf;
}

}  // namespace k3orb
