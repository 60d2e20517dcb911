#pragma once

// Shift perturbations of operators and the identities relating them to
// inversion and reflection. Every identity is returned as a pair of
// expression trees; two trees describe the same operator exactly when their
// resolvents agree everywhere, which is how callers check them.

#include <utility>

#include "normsplit/operators.hpp"

namespace normsplit {

enum class ShiftDirection { inner, outer };

/// The shift x ↦ x − w applied before (inner) or after (outer) an operator.
struct ShiftSpec {
  Vector w;
  ShiftDirection direction = ShiftDirection::inner;
};

/// x ↦ A(x − w); J(x) = J_A(x − w) + w.
OperatorSpec inner_perturb(const OperatorSpec& op, const Vector& w);

/// x ↦ Ax − w; J(x) = J_A(x + w).
OperatorSpec outer_perturb(const OperatorSpec& op, const Vector& w);

OperatorSpec apply_shift(const OperatorSpec& op, const ShiftSpec& shift);

/// Left- and right-hand sides of the perturbation identities, index 1..6:
///   1. inverse of inner shift by w  = outer shift by −w of the inverse
///   2. inverse of outer shift by w  = inner shift by −w of the inverse
///   3. flip of inner shift by w     = inner shift by −w of the flip
///   4. flip of outer shift by w     = outer shift by −w of the flip
///   5. flipped inverse of inner shift by w = outer shift by w of the flipped inverse
///   6. flipped inverse of outer shift by w = inner shift by w of the flipped inverse
/// Throws std::out_of_range for other indices.
std::pair<OperatorSpec, OperatorSpec> calculus_identity_pair(int index, const OperatorSpec& op,
                                                             const Vector& w);

/// Dual pair of the w-perturbation (inner_perturb(A,w), outer_perturb(B,w)):
/// (outer shift by w of A's flipped inverse, inner shift by −w of B⁻¹).
std::pair<OperatorSpec, OperatorSpec> dual_of_perturbed(
    const std::pair<OperatorSpec, OperatorSpec>& pair, const Vector& w);

}  // namespace normsplit
