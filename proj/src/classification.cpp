#include "k3orb/classification.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "k3orb/errors.hpp"

namespace k3orb {

namespace {

constexpr InvariantPair kAdmissible[] = {
    {1, 1}, {2, 0}, {2, 2}, {3, 1}, {3, 3}, {4, 2},  {4, 4},  {5, 1},
    {5, 3}, {5, 5}, {6, 0}, {6, 2}, {6, 4}, {6, 6},  {7, 1},  {7, 3},
    {7, 5}, {7, 7}, {8, 2}, {8, 4}, {9, 1}, {9, 3},  {10, 0}, {10, 2},
};

}  // namespace

std::span<const InvariantPair> admissible_pairs() { return kAdmissible; }

bool is_admissible(InvariantPair p) {
  return std::ranges::binary_search(kAdmissible, p);
}

std::vector<InvariantPair> nearest_admissible_pairs(InvariantPair p) {
  int best = std::numeric_limits<int>::max();
  std::vector<InvariantPair> out;
  for (const InvariantPair& q : kAdmissible) {
    int dist = std::abs(q.m - p.m) + std::abs(q.a - p.a);
    if (dist < best) {
      best = dist;
      out.clear();
    }
    if (dist == best) out.push_back(q);
  }
  return out;
}

FixedLocusTopology fixed_locus(InvariantPair p) {
  if (!is_admissible(p)) {
    std::ostringstream msg;
    msg << "invariant pair (" << p.m << ", " << p.a << ") is not admissible";
    throw InadmissiblePairError(msg.str(), p.m, p.a);
  }

  const int chi = 24 - 3 * p.m;

  // The (7, 7) locus degenerates to three isolated points; it has to be
  // dispatched before the generic formulas, which would give k = -1.
  if (p.m == 7 && p.a == 7) {
    FixedLocusTopology t{FixedLocusShape::ThreeIsolatedPoints, 3, 0,
                         std::nullopt, chi};
    if (t.n != chi)
      throw std::logic_error("fixed-locus chi inconsistent with point count");
    return t;
  }

  FixedLocusTopology t{FixedLocusShape::Generic, 10 - p.m,
                       6 - (p.m + p.a) / 2, (p.m - p.a) / 2, chi};
  // chi is also the sum over components: n points, k rational curves, one
  // curve of genus g. The two computations agreeing is a structural check,
  // not an assumption.
  if (t.n + 2 * t.k + (2 - 2 * *t.g) != chi)
    throw std::logic_error("fixed-locus chi inconsistent with its components");
  return t;
}

TangentAction tangent_action(TangentKind kind) {
  switch (kind) {
    case TangentKind::IsolatedPoint:
      return {kind, {2, 2}};  // diag(zeta3^2, zeta3^2)
    case TangentKind::OnCurve:
      return {kind, {1, 0}};  // diag(zeta3, 1): rotation normal to the curve
  }
  throw std::invalid_argument("unknown tangent action kind");
}

}  // namespace k3orb
