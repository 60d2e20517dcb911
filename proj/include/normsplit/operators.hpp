#pragma once

// Maximally monotone operators represented through their resolvents.
//
// An OperatorSpec is an immutable expression tree. Leaves are operators with
// a closed-form or linear-solve resolvent; interior nodes are the inverse,
// the reflection A ↦ (−Id)∘A∘(−Id), and the two shift perturbations. Set-valued
// operators are never evaluated pointwise: every question about an operator is
// answered through J_A = (Id + A)⁻¹, which is total and single valued.

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "normsplit/sets.hpp"
#include "normsplit/vecspace.hpp"

namespace normsplit {

/// Default tolerance of graph-membership certificates.
inline constexpr double kTolCert = 1e-7;
/// Slack allowed below zero for the symmetric part of a monotone matrix.
inline constexpr double kMonotoneSlack = 1e-10;

struct OperatorNode;

class OperatorSpec {
 public:
  /// A = N_U; J_A = P_U.
  static OperatorSpec normal_cone(ProjectableSet set);
  /// A: x ↦ Mx + a. Throws PreconditionViolation unless M + Mᵀ is PSD.
  static OperatorSpec affine_monotone(Matrix m, Vector a);
  /// gra A = X × {a}.
  static OperatorSpec constant_valued(Vector a);
  /// A ≡ 0, valid in every dimension.
  static OperatorSpec zero();
  static OperatorSpec inverse(OperatorSpec inner);
  /// (−Id)∘A∘(−Id)
  static OperatorSpec flip_both(OperatorSpec inner);
  /// x ↦ A(x − w)
  static OperatorSpec inner_shift(OperatorSpec inner, Vector w);
  /// x ↦ Ax − w
  static OperatorSpec outer_shift(OperatorSpec inner, Vector w);

  const OperatorNode& node() const { return *node_; }
  /// Ambient dimension; empty when no node in the tree fixes it (pure Zero).
  std::optional<Eigen::Index> dim() const { return dim_; }

 private:
  OperatorSpec(std::shared_ptr<const OperatorNode> node, std::optional<Eigen::Index> dim)
      : node_(std::move(node)), dim_(dim) {}

  std::shared_ptr<const OperatorNode> node_;
  std::optional<Eigen::Index> dim_;
};

struct NormalConeOp {
  ProjectableSet set;
};

struct AffineMonotoneOp {
  Matrix m;
  Vector a;
  std::shared_ptr<const LinearSolver> id_plus_m;  // factorization of Id + M
};

struct ConstantValuedOp {
  Vector a;
};

struct ZeroOp {};

struct InverseOp {
  OperatorSpec inner;
};

struct FlipBothOp {
  OperatorSpec inner;
};

struct InnerShiftOp {
  OperatorSpec inner;
  Vector w;
};

struct OuterShiftOp {
  OperatorSpec inner;
  Vector w;
};

struct OperatorNode {
  std::variant<NormalConeOp, AffineMonotoneOp, ConstantValuedOp, ZeroOp, InverseOp, FlipBothOp,
               InnerShiftOp, OuterShiftOp>
      v;
};

/// J_A x = (Id + A)⁻¹ x.
Vector resolvent(const OperatorSpec& op, const Vector& x);

/// R_A x = 2 J_A x − x.
Vector reflected_resolvent(const OperatorSpec& op, const Vector& x);

/// Closed-form resolvent (x − Ax)/(1 + alpha) of a skew matrix with A² = −alpha·Id.
Vector resolvent_skew_formula(double alpha, const Matrix& a, const Vector& x);

/// ‖J_A(x + xstar) − x‖ / (1 + ‖x‖); zero exactly when xstar ∈ Ax.
double membership_residual(const OperatorSpec& op, const Vector& x, const Vector& xstar);

/// Certifies xstar ∈ Ax up to tol.
bool membership(const OperatorSpec& op, const Vector& x, const Vector& xstar,
                double tol = kTolCert);

/// Compact textual form of the expression tree, e.g. "FlipBoth(Inverse(NormalCone(Ball)))".
std::string describe(const OperatorSpec& op);

}  // namespace normsplit
