#include "normsplit/perturb.hpp"

#include <stdexcept>
#include <string>

namespace normsplit {

namespace {

OperatorSpec flipped_inverse(const OperatorSpec& op) {
  return OperatorSpec::flip_both(OperatorSpec::inverse(op));
}

}  // namespace

OperatorSpec inner_perturb(const OperatorSpec& op, const Vector& w) {
  return OperatorSpec::inner_shift(op, w);
}

OperatorSpec outer_perturb(const OperatorSpec& op, const Vector& w) {
  return OperatorSpec::outer_shift(op, w);
}

OperatorSpec apply_shift(const OperatorSpec& op, const ShiftSpec& shift) {
  return shift.direction == ShiftDirection::inner ? inner_perturb(op, shift.w)
                                                  : outer_perturb(op, shift.w);
}

std::pair<OperatorSpec, OperatorSpec> calculus_identity_pair(int index, const OperatorSpec& op,
                                                             const Vector& w) {
  using O = OperatorSpec;
  const Vector neg = -w;
  switch (index) {
    case 1:
      return {O::inverse(inner_perturb(op, w)), outer_perturb(O::inverse(op), neg)};
    case 2:
      return {O::inverse(outer_perturb(op, w)), inner_perturb(O::inverse(op), neg)};
    case 3:
      return {O::flip_both(inner_perturb(op, w)), inner_perturb(O::flip_both(op), neg)};
    case 4:
      return {O::flip_both(outer_perturb(op, w)), outer_perturb(O::flip_both(op), neg)};
    case 5:
      return {flipped_inverse(inner_perturb(op, w)), outer_perturb(flipped_inverse(op), w)};
    case 6:
      return {flipped_inverse(outer_perturb(op, w)), inner_perturb(flipped_inverse(op), w)};
    default:
      throw std::out_of_range("calculus_identity_pair: index " + std::to_string(index) +
                              " not in 1..6");
  }
}

std::pair<OperatorSpec, OperatorSpec> dual_of_perturbed(
    const std::pair<OperatorSpec, OperatorSpec>& pair, const Vector& w) {
  return {outer_perturb(flipped_inverse(pair.first), w),
          inner_perturb(OperatorSpec::inverse(pair.second), -w)};
}

}  // namespace normsplit
