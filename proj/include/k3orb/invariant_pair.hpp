#pragma once

#include <compare>

namespace k3orb {

// The (m, a) invariants of a fixed lattice: m is half the rank of its
// orthogonal complement in the rank-22 K3 lattice, a the number of Z/3
// factors in its discriminant group. Ordered by (m, a) so listings are
// deterministic.
struct InvariantPair {
  int m = 0;
  int a = 0;

  friend auto operator<=>(const InvariantPair&, const InvariantPair&) =
      default;
};

}  // namespace k3orb
