#include "k3orb/orbifold.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "k3orb/errors.hpp"

namespace k3orb {

SingularityType::SingularityType(std::array<int, 3> weights,
                                 SingularityCarrier carrier)
    : carrier_(carrier) {
  for (int& w : weights) w = ((w % 3) + 3) % 3;
  if (weights == std::array<int, 3>{0, 0, 0})
    throw std::invalid_argument(
        "singularity weights must not all vanish mod 3");

  // Two generators of the same cyclic group present the same singularity:
  // take the larger of the sorted representatives so equality is decidable.
  std::array<int, 3> doubled = weights;
  for (int& w : doubled) w = (2 * w) % 3;
  std::sort(weights.rbegin(), weights.rend());
  std::sort(doubled.rbegin(), doubled.rend());
  weights_ = std::max(weights, doubled);
}

std::string SingularityType::str() const {
  std::ostringstream out;
  out << "1/3(" << weights_[0] << "," << weights_[1] << "," << weights_[2]
      << ")";
  return out.str();
}

bool is_gorenstein(const SingularityType& t) {
  return t.weight_sum() % 3 == 0;
}

SingularityInventory quotient_inventory(const FixedLocusTopology& f) {
  SingularityInventory inv;
  if (f.n > 0) {
    inv.at_zero.points = PointClass{
        SingularityType({2, 2, 2}, SingularityCarrier::IsolatedPoint), f.n};
    inv.at_infinity.points = PointClass{
        SingularityType({2, 2, 1}, SingularityCarrier::IsolatedPoint), f.n};
  }
  if (f.shape == FixedLocusShape::Generic) {
    inv.at_zero.curves = CurveClass{
        SingularityType({1, 0, 2}, SingularityCarrier::Curve), f.k, *f.g};
    inv.at_infinity.curves = CurveClass{
        SingularityType({1, 0, 1}, SingularityCarrier::Curve), f.k, *f.g};
  }
  return inv;
}

Rat chi_quotient(std::span<const int> chi_fixed_per_element,
                 int group_order) {
  if (group_order <= 0)
    throw std::invalid_argument("group order must be positive");
  if (chi_fixed_per_element.empty())
    throw std::invalid_argument("chi list must not be empty");
  if (std::cmp_not_equal(chi_fixed_per_element.size(), group_order))
    throw std::invalid_argument(
        "need exactly one chi(M^g) per group element");

  Int sum(0);
  for (int chi : chi_fixed_per_element) sum += chi;
  Rat q(sum, Int(group_order));
  q.canonicalize();
  return q;
}

int chi_fixed_locus_product(const FixedLocusTopology& f) { return 2 * f.chi; }

int chi_resolution(int chi_base, int chi_exceptional, int chi_center) {
  return chi_base + chi_exceptional - chi_center;
}

int resolution_delta(const FixedLocusTopology& f) {
  // P^2 (chi 3) over each isolated point.
  int delta = f.n * chi_resolution(0, 3, 1);
  if (f.shape == FixedLocusShape::Generic) {
    // Over a curve the exceptional set fibers in two P^1s meeting at a
    // point (fiber chi 3), so it contributes 3*chi(C) - chi(C).
    const int rational = 2;
    const int distinguished = 2 - 2 * *f.g;
    delta += f.k * chi_resolution(0, 3 * rational, rational);
    delta += chi_resolution(0, 3 * distinguished, distinguished);
  }
  return delta;
}

int chi_branched_cover(int n, int chi_base, int chi_branch) {
  if (n < 1) throw std::invalid_argument("cover degree must be positive");
  return n * chi_base - (n - 1) * chi_branch;
}

bool cover_order_obstruction(int p) { return p - 2 == 1; }

ConstructionReport build_report(InvariantPair pair) {
  FixedLocusTopology locus = fixed_locus(pair);  // rejects inadmissible pairs
  SingularityInventory inventory = quotient_inventory(locus);

  const int chi_product = kChiK3 * 2;  // chi(K3) * chi(P^1)

  EulerStage closed{
      chi_product,       48 - pair.m, 96 - 7 * pair.m, 240 - 21 * pair.m,
      EulerMode::ClosedForm,
  };

  // Both non-identity elements of Z/3 fix exactly S^rho x {0, infinity}.
  const int fixed_product = chi_fixed_locus_product(locus);
  const std::array<int, 3> per_element{chi_product, fixed_product,
                                       fixed_product};
  Rat z = chi_quotient(per_element, 3);
  if (z.get_den() != 1) {
    std::ostringstream msg;
    msg << "chi(Z) evaluated to the non-integer " << z << " for (m, a) = ("
        << pair.m << ", " << pair.a << "); the quotient bookkeeping is"
        << " inconsistent";
    throw std::logic_error(msg.str());
  }

  EulerStage first{chi_product, static_cast<int>(z.get_num().get_si()), 0, 0,
                   EulerMode::FirstPrinciples};
  first.chi_x0 = first.chi_z + resolution_delta(locus);
  first.chi_x = chi_branched_cover(3, first.chi_x0, kChiK3);

  StageMismatch mismatch{
      closed.chi_product != first.chi_product,
      closed.chi_z != first.chi_z,
      closed.chi_x0 != first.chi_x0,
      closed.chi_x != first.chi_x,
  };

  std::vector<ReportNote> notes;
  notes.push_back(
      {"cover-blowup-assumed-euler-neutral",
       "the blow-up of the self-intersection locus of the branch divisor is "
       "treated as Euler-neutral; the cover formula is applied with no "
       "correction term"});

  auto note_mismatch = [&notes](bool flag, const char* code,
                                const char* stage, int closed_value,
                                int first_value) {
    if (!flag) return;
    std::ostringstream msg;
    msg << "closed-form " << stage << " = " << closed_value
        << " but first-principles evaluation gives " << first_value;
    notes.push_back({code, msg.str()});
  };
  note_mismatch(mismatch.product, "chi-product-mismatch", "chi(S x P^1)",
                closed.chi_product, first.chi_product);
  note_mismatch(mismatch.z, "chi-z-mismatch", "chi(Z)", closed.chi_z,
                first.chi_z);
  note_mismatch(mismatch.x0, "chi-x0-mismatch", "chi(X0)", closed.chi_x0,
                first.chi_x0);
  note_mismatch(mismatch.x, "chi-x-mismatch", "chi(X)", closed.chi_x,
                first.chi_x);

  return {pair,  locus,    inventory, closed,
          first, mismatch, std::move(notes)};
}

}  // namespace k3orb
