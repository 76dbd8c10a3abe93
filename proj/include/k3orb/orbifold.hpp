#pragma once

// The quotient-and-resolve construction at the level of Euler numbers:
// quotient-singularity inventories of (S x P^1)/(rho x psi), Gorenstein
// bookkeeping, crepant-resolution and branched-cover Euler accounting, and
// the staged pipeline chi(S x P^1) -> chi(Z) -> chi(X0) -> chi(X), evaluated
// both from the printed closed forms and from first principles so the two
// can be compared stage by stage.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k3orb/arith.hpp"
#include "k3orb/classification.hpp"
#include "k3orb/invariant_pair.hpp"

namespace k3orb {

// chi of a K3 surface; also the branch divisor D0 of the triple cover is a
// K3, which is where the constant enters the cover formula.
inline constexpr int kChiK3 = 24;

enum class SingularityCarrier { IsolatedPoint, Curve };

// A cyclic quotient singularity 1/3(a,b,c). The weights are zeta3-exponents,
// read mod 3, and stored canonically: sorted descending, taking the
// lexicographically larger of the two generator representatives (a,b,c) and
// (2a,2b,2c). Equal geometric types therefore compare equal.
class SingularityType {
 public:
  SingularityType(std::array<int, 3> weights, SingularityCarrier carrier);

  const std::array<int, 3>& weights() const { return weights_; }
  SingularityCarrier carrier() const { return carrier_; }
  int weight_sum() const { return weights_[0] + weights_[1] + weights_[2]; }

  std::string str() const;  // "1/3(2,1,0)"

  friend bool operator==(const SingularityType&, const SingularityType&) =
      default;

 private:
  std::array<int, 3> weights_;
  SingularityCarrier carrier_;
};

// The generator acts with determinant zeta3^(a+b+c), so the singularity is
// Gorenstein exactly when the weight sum vanishes mod 3.
bool is_gorenstein(const SingularityType& t);

struct PointClass {
  SingularityType type;
  int count;
};

struct CurveClass {
  SingularityType type;
  int rational_curves;  // the k smooth rational curves
  int genus;            // of the one distinguished curve

  int total() const { return rational_curves + 1; }
};

// Singular locus over one of the two fixed points of psi on P^1.
struct PoleInventory {
  std::optional<PointClass> points;
  std::optional<CurveClass> curves;
};

struct SingularityInventory {
  PoleInventory at_zero;
  PoleInventory at_infinity;
};

// Where the quotient Z is singular and how: point types 1/3(2,2,2) over
// z=0 and 1/3(2,2,1) over z=infinity, curve types 1/3(1,0,2) and 1/3(1,0,1)
// respectively. The z=0 side is Gorenstein, the z=infinity side is not.
SingularityInventory quotient_inventory(const FixedLocusTopology& f);

// (1/|G|) * sum of chi(M^g) over the group, as an exact rational; the
// caller is responsible for insisting on integrality.
Rat chi_quotient(std::span<const int> chi_fixed_per_element, int group_order);

// chi of the rho x psi fixed locus in S x P^1: one copy of the surface
// fixed locus over each of z=0 and z=infinity.
int chi_fixed_locus_product(const FixedLocusTopology& f);

// chi after replacing a center W by an exceptional set E.
int chi_resolution(int chi_base, int chi_exceptional, int chi_center);

// Total Euler increment from crepantly resolving every z=0 singularity:
// a P^2 over each isolated point, a fiber of two P^1s meeting in a point
// over each fixed curve. The z=infinity singularities stay untouched.
int resolution_delta(const FixedLocusTopology& f);

// chi of an n-fold cover totally ramified over the branch locus.
int chi_branched_cover(int n, int chi_base, int chi_branch);

// The cover needs a line bundle L with L^p = [D0]^(p-2) equal to [D0];
// matching exponents forces p - 2 = 1. True exactly at p = 3.
bool cover_order_obstruction(int p);

enum class EulerMode { ClosedForm, FirstPrinciples };

struct EulerStage {
  int chi_product;  // chi(S x P^1)
  int chi_z;        // after the quotient
  int chi_x0;       // after crepantly resolving over z=0
  int chi_x;        // after the 3:1 cover branched over D0
  EulerMode mode;

  friend bool operator==(const EulerStage&, const EulerStage&) = default;
};

struct StageMismatch {
  bool product = false;
  bool z = false;
  bool x0 = false;
  bool x = false;

  bool any() const { return product || z || x0 || x; }

  friend bool operator==(const StageMismatch&, const StageMismatch&) = default;
};

struct ReportNote {
  std::string code;
  std::string message;
};

struct ConstructionReport {
  InvariantPair pair;
  FixedLocusTopology fixed_locus;
  SingularityInventory inventory;
  EulerStage closed_form;
  EulerStage first_principles;
  StageMismatch mismatch;
  std::vector<ReportNote> notes;
};

// Runs the whole construction for one admissible pair. Both Euler modes are
// always computed and reported; disagreements are flagged per stage and
// spelled out in the notes, never silently reconciled.
ConstructionReport build_report(InvariantPair pair);

}  // namespace k3orb
