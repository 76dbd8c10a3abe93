#pragma once

// Lattices as Gram matrices, their standard building blocks, and the
// invariants extracted from them: signature, discriminant group, and the
// (m, a) reading used against the classification.

#include <vector>

#include "k3orb/arith.hpp"
#include "k3orb/inertia.hpp"
#include "k3orb/invariant_pair.hpp"

namespace k3orb {

// An even-dimensional array of intersection numbers; symmetric by
// construction (the constructor rejects anything else).
class GramLattice {
 public:
  explicit GramLattice(IntMatrix gram);

  Index rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

 private:
  IntMatrix gram_;
};

GramLattice hyperbolic_plane();
GramLattice a2_lattice(bool negative = false);
GramLattice e8_lattice(bool negative = false);

// H^3 + (-E8)^2: the rank-22 K3 lattice.
GramLattice k3_lattice();

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);

// Same lattice with the form multiplied through by factor (nonzero).
GramLattice rescale(const GramLattice& a, const Int& factor);

Int determinant(const GramLattice& l);

Inertia inertia(const GramLattice& l);

// l*/l for a nondegenerate lattice, presented by its invariant factors > 1
// in their divisibility chain; the empty list is the trivial group.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(std::vector<Int> invariant_factors);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }
  Int order() const;

  // True when every invariant factor is 3 (so the group is Z/3 ^ a);
  // vacuously true for the trivial group.
  bool three_elementary() const;

 private:
  std::vector<Int> factors_;
};

DiscriminantGroup discriminant_group(const GramLattice& l);

// What a candidate fixed lattice looks like through the classification:
// its (m, a) pair plus the flags needed to judge it.
struct FixedLatticeReading {
  InvariantPair pair;
  DiscriminantGroup group;
  bool three_elementary;
  bool admissible;
};

// m = (22 - rank)/2, a = number of invariant factors. Requires even rank
// <= 22 and a nondegenerate form; a discriminant group that is not
// 3-elementary is reported through the flag, not an error.
FixedLatticeReading fixed_lattice_invariants(const GramLattice& l);

}  // namespace k3orb
