#pragma once

// Inertia (p, n, z) of a symmetric matrix by congruence diagonalization over
// Q. Sylvester's law makes the signature invariant under M -> E M E^T, so
// counting pivot signs after exact rational elimination is exact -- no
// eigenvalues, no floating point.

#include <stdexcept>

#include <Eigen/Core>

#include "k3orb/arith.hpp"

namespace k3orb {

struct Inertia {
  int positive = 0;
  int negative = 0;
  int null = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inertia of a non-square matrix");

  RatMatrix m = a.template cast<Rat>();
  const Index n = m.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw std::invalid_argument("inertia of a non-symmetric matrix");

  Inertia out;
  for (Index t = 0; t < n; ++t) {
    if (m(t, t) == 0) {
      Index p = t + 1;
      while (p < n && m(p, p) == 0) ++p;
      if (p < n) {
        m.row(t).swap(m.row(p));
        m.col(t).swap(m.col(p));
      } else {
        // Every trailing diagonal entry vanishes. If row t still has an
        // off-diagonal entry, fold that row in: the congruence
        // row/col t += row/col j turns m(t,t) into 2*m(t,j) != 0 (the
        // hyperbolic-block case, which then splits into one + and one -).
        Index j = t + 1;
        while (j < n && m(t, j) == 0) ++j;
        if (j == n) {
          ++out.null;  // row and column t are gone entirely
          continue;
        }
        m.row(t) += m.row(j);
        m.col(t) += m.col(j);
      }
    }

    (m(t, t) > 0 ? out.positive : out.negative)++;
    for (Index i = t + 1; i < n; ++i) {
      if (m(i, t) == 0) continue;
      Rat f = m(i, t) / m(t, t);
      m.row(i) -= f * m.row(t);
      m.col(i) -= f * m.col(t);
    }
  }
  return out;
}

}  // namespace k3orb
