#include "k3orb/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "k3orb/classification.hpp"
#include "k3orb/determinant.hpp"
#include "k3orb/errors.hpp"
#include "k3orb/smith.hpp"

namespace k3orb {

GramLattice::GramLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    throw std::invalid_argument("gram matrix must be square");
  for (Index i = 0; i < gram_.rows(); ++i)
    for (Index j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw NonSymmetricMatrixError("gram matrix must be symmetric");
}

GramLattice hyperbolic_plane() {
  IntMatrix g(2, 2);
  g << 0, 1, 1, 0;
  return GramLattice(std::move(g));
}

GramLattice a2_lattice(bool negative) {
  IntMatrix g(2, 2);
  g << 2, -1, -1, 2;
  if (negative) g = -g;
  return GramLattice(std::move(g));
}

GramLattice e8_lattice(bool negative) {
  // Cartan matrix in Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2
  // attached to node 4.
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = 2;
  constexpr std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5},
                                           {5, 6}, {6, 7}, {1, 3}};
  for (auto [i, j] : edges) g(i, j) = g(j, i) = -1;
  if (negative) g = -g;
  return GramLattice(std::move(g));
}

GramLattice k3_lattice() {
  GramLattice h = hyperbolic_plane();
  GramLattice e8_neg = e8_lattice(/*negative=*/true);
  return direct_sum(direct_sum(h, direct_sum(h, h)),
                    direct_sum(e8_neg, e8_neg));
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  IntMatrix g = IntMatrix::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  g.topLeftCorner(a.rank(), a.rank()) = a.gram();
  g.bottomRightCorner(b.rank(), b.rank()) = b.gram();
  return GramLattice(std::move(g));
}

GramLattice rescale(const GramLattice& a, const Int& factor) {
  if (factor == 0)
    throw std::invalid_argument("rescale factor must be nonzero");
  IntMatrix g = factor * a.gram();
  return GramLattice(std::move(g));
}

Int determinant(const GramLattice& l) { return bareiss_determinant(l.gram()); }

Inertia inertia(const GramLattice& l) { return inertia(l.gram()); }

DiscriminantGroup::DiscriminantGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw std::invalid_argument("discriminant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw std::invalid_argument(
          "discriminant factors must form a divisibility chain");
  }
}

Int DiscriminantGroup::order() const {
  Int n(1);
  for (const Int& d : factors_) n *= d;
  return n;
}

bool DiscriminantGroup::three_elementary() const {
  for (const Int& d : factors_)
    if (d != 3) return false;
  return true;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  auto diag = smith_normal_form(l.gram()).diagonal();
  std::vector<Int> factors;
  for (Int& d : diag) {
    if (d == 0)
      throw DegenerateLatticeError(
          "lattice is degenerate (gram determinant is zero)");
    if (d > 1) factors.push_back(std::move(d));
  }
  return DiscriminantGroup(std::move(factors));
}

FixedLatticeReading fixed_lattice_invariants(const GramLattice& l) {
  if (l.rank() > 22)
    throw std::invalid_argument(
        "fixed lattice rank exceeds 22, the rank of the K3 lattice");
  if (l.rank() % 2 != 0)
    throw std::invalid_argument("fixed lattice rank must be even");

  DiscriminantGroup group = discriminant_group(l);
  // m is read as half the rank of the orthogonal complement inside the
  // rank-22 K3 lattice; that is the only reading under which the fixed-locus
  // formulas come out integral.
  InvariantPair pair{static_cast<int>((22 - l.rank()) / 2),
                     static_cast<int>(group.invariant_factors().size())};
  bool three_elem = group.three_elementary();
  bool admissible = is_admissible(pair);
  return {pair, std::move(group), three_elem, admissible};
}

}  // namespace k3orb
