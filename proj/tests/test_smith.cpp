#include <doctest.h>

#include <random>
#include <vector>

#include "k3orb/determinant.hpp"
#include "k3orb/smith.hpp"
#include "oracles.hpp"

using k3orb::Index;
using k3orb::Int;
using k3orb::IntMatrix;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()),
              static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_decomposition(const IntMatrix& a) {
  auto snf = k3orb::smith_normal_form(a);

  CHECK((snf.u * a * snf.v - snf.d).isZero());

  // Transforms are unimodular.
  Int du = k3orb::bareiss_determinant(snf.u);
  Int dv = k3orb::bareiss_determinant(snf.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));

  // d is diagonal, nonnegative, with the divisibility chain d_k | d_{k+1}
  // and zeros only at the tail.
  for (Index i = 0; i < snf.d.rows(); ++i)
    for (Index j = 0; j < snf.d.cols(); ++j)
      if (i != j) CHECK(snf.d(i, j) == 0);
  auto diag = snf.diagonal();
  for (std::size_t k = 0; k < diag.size(); ++k) {
    CHECK(diag[k] >= 0);
    if (k + 1 < diag.size()) {
      if (diag[k] == 0)
        CHECK(diag[k + 1] == 0);
      else
        CHECK(diag[k + 1] % diag[k] == 0);
    }
  }
}

}  // namespace

TEST_CASE("hyperbolic-plane gram matrix reduces to diag(1, 1)") {
  IntMatrix h = from_rows({{0, 1}, {1, 0}});
  auto snf = k3orb::smith_normal_form(h);
  CHECK(snf.diagonal() == std::vector<Int>{1, 1});
  check_decomposition(h);
}

TEST_CASE("A2 cartan matrix reduces to diag(1, 3)") {
  IntMatrix a2 = from_rows({{2, -1}, {-1, 2}});
  auto snf = k3orb::smith_normal_form(a2);
  CHECK(snf.diagonal() == std::vector<Int>{1, 3});
  check_decomposition(a2);
}

TEST_CASE("scaled hyperbolic plane picks up both factors") {
  IntMatrix h3 = from_rows({{0, 3}, {3, 0}});
  auto snf = k3orb::smith_normal_form(h3);
  CHECK(snf.diagonal() == std::vector<Int>{3, 3});
}

TEST_CASE("zero and identity matrices") {
  CHECK(k3orb::smith_normal_form(IntMatrix::Zero(3, 3)).diagonal() ==
        std::vector<Int>{0, 0, 0});
  CHECK(k3orb::smith_normal_form(IntMatrix::Identity(4, 4)).diagonal() ==
        std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("textbook rectangular example") {
  IntMatrix a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  auto snf = k3orb::smith_normal_form(a);
  CHECK(snf.diagonal() == oracle::smith_diagonal_by_minors(a));
  check_decomposition(a);
}

TEST_CASE("rank-deficient matrix has trailing zeros") {
  IntMatrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {3, 6, 9}});
  auto snf = k3orb::smith_normal_form(a);
  CHECK(snf.diagonal() == std::vector<Int>{1, 0, 0});
  check_decomposition(a);
}

TEST_CASE("random matrices agree with the gcd-of-minors characterization") {
  std::mt19937 rng(20240311);
  for (int trial = 0; trial < 60; ++trial) {
    Index rows = 1 + static_cast<Index>(rng() % 6);
    Index cols = 1 + static_cast<Index>(rng() % 6);
    IntMatrix a = oracle::random_matrix(rng, rows, cols);
    auto snf = k3orb::smith_normal_form(a);
    CHECK(snf.diagonal() == oracle::smith_diagonal_by_minors(a));
    check_decomposition(a);
  }
}

TEST_CASE("entries that force the divisibility fix-up") {
  // diag(2, 3): no single entry divides the other, so the reduction has to
  // combine rows to reach diag(1, 6).
  IntMatrix a = from_rows({{2, 0}, {0, 3}});
  auto snf = k3orb::smith_normal_form(a);
  CHECK(snf.diagonal() == std::vector<Int>{1, 6});
  check_decomposition(a);

  IntMatrix b = from_rows({{4, 0, 0}, {0, 6, 0}, {0, 0, 9}});
  auto snfb = k3orb::smith_normal_form(b);
  CHECK(snfb.diagonal() == oracle::smith_diagonal_by_minors(b));
  check_decomposition(b);
}
