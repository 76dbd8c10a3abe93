#pragma once

// The classification data for order-3 non-symplectic automorphisms of K3
// surfaces: which (m, a) pairs occur, what the fixed locus of each looks
// like, and how the automorphism acts on tangent spaces at fixed points.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "k3orb/invariant_pair.hpp"

namespace k3orb {

enum class FixedLocusShape { Generic, ThreeIsolatedPoints };

// Fixed locus of the automorphism: n isolated points, k smooth rational
// curves, and -- in the generic shape -- one distinguished curve of genus g.
struct FixedLocusTopology {
  FixedLocusShape shape;
  int n;
  int k;
  std::optional<int> g;  // absent when the locus is just the three points
  int chi;               // always 24 - 3m
};

enum class TangentKind { IsolatedPoint, OnCurve };

// Weights (i, j) meaning the action is diag(zeta3^i, zeta3^j) on the
// tangent plane at a fixed point.
struct TangentAction {
  TangentKind kind;
  std::array<int, 2> weights;
};

// The 24 realizable (m, a) pairs, sorted ascending.
std::span<const InvariantPair> admissible_pairs();

bool is_admissible(InvariantPair p);

// Admissible pairs at minimal L1 distance from p, sorted; used to suggest
// corrections when a requested pair is off the list.
std::vector<InvariantPair> nearest_admissible_pairs(InvariantPair p);

// Fixed-locus topology of an admissible pair. Throws InadmissiblePairError
// for anything off the list.
FixedLocusTopology fixed_locus(InvariantPair p);

TangentAction tangent_action(TangentKind kind);

}  // namespace k3orb
