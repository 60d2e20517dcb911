#include "normsplit/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace normsplit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kSkewTol = 1e-10;

std::optional<Eigen::Index> shifted_dim(const OperatorSpec& inner, const Vector& w,
                                        const char* what) {
  require_finite(w, what);
  if (inner.dim() && *inner.dim() != w.size()) {
    throw DimensionMismatch(std::string(what) + ": shift of dimension " +
                            std::to_string(w.size()) + " on operator of dimension " +
                            std::to_string(*inner.dim()));
  }
  return w.size();
}

Vector resolvent_unchecked(const OperatorSpec& op, const Vector& x) {
  return std::visit(
      overloaded{
          [&](const NormalConeOp& n) -> Vector { return project(n.set, x); },
          [&](const AffineMonotoneOp& n) -> Vector { return n.id_plus_m->solve(x - n.a); },
          [&](const ConstantValuedOp& n) -> Vector { return x - n.a; },
          [&](const ZeroOp&) -> Vector { return x; },
          [&](const InverseOp& n) -> Vector { return x - resolvent_unchecked(n.inner, x); },
          [&](const FlipBothOp& n) -> Vector { return -resolvent_unchecked(n.inner, -x); },
          [&](const InnerShiftOp& n) -> Vector {
            return resolvent_unchecked(n.inner, x - n.w) + n.w;
          },
          [&](const OuterShiftOp& n) -> Vector { return resolvent_unchecked(n.inner, x + n.w); },
      },
      op.node().v);
}

}  // namespace

OperatorSpec OperatorSpec::normal_cone(ProjectableSet set) {
  const auto d = set.dim();
  return {std::make_shared<const OperatorNode>(OperatorNode{NormalConeOp{std::move(set)}}), d};
}

OperatorSpec OperatorSpec::affine_monotone(Matrix m, Vector a) {
  require_finite(m, "AffineMonotone.M");
  require_finite(a, "AffineMonotone.a");
  if (m.rows() != m.cols() || m.rows() != a.size() || a.size() == 0) {
    throw DimensionMismatch("AffineMonotone: M must be square and match a");
  }
  const double lowest = min_symmetric_eigenvalue(m);
  if (lowest < -kMonotoneSlack) {
    throw PreconditionViolation("AffineMonotone: M + Mᵀ is not positive semidefinite (eigenvalue " +
                                std::to_string(lowest) + ")");
  }
  const Matrix id_plus_m = Matrix::Identity(m.rows(), m.cols()) + m;
  std::shared_ptr<const LinearSolver> solver;
  try {
    solver = std::make_shared<const LinearSolver>(id_plus_m);
  } catch (const SingularSystem& e) {
    // Id + M is invertible for every monotone M.
    throw std::logic_error(std::string("AffineMonotone: Id + M singular: ") + e.what());
  }
  const auto d = a.size();
  return {std::make_shared<const OperatorNode>(
              OperatorNode{AffineMonotoneOp{std::move(m), std::move(a), std::move(solver)}}),
          d};
}

OperatorSpec OperatorSpec::constant_valued(Vector a) {
  require_finite(a, "ConstantValued.a");
  if (a.size() == 0) throw std::invalid_argument("ConstantValued: empty dimension");
  const auto d = a.size();
  return {std::make_shared<const OperatorNode>(OperatorNode{ConstantValuedOp{std::move(a)}}), d};
}

OperatorSpec OperatorSpec::zero() {
  return {std::make_shared<const OperatorNode>(OperatorNode{ZeroOp{}}), std::nullopt};
}

OperatorSpec OperatorSpec::inverse(OperatorSpec inner) {
  const auto d = inner.dim();
  return {std::make_shared<const OperatorNode>(OperatorNode{InverseOp{std::move(inner)}}), d};
}

OperatorSpec OperatorSpec::flip_both(OperatorSpec inner) {
  const auto d = inner.dim();
  return {std::make_shared<const OperatorNode>(OperatorNode{FlipBothOp{std::move(inner)}}), d};
}

OperatorSpec OperatorSpec::inner_shift(OperatorSpec inner, Vector w) {
  const auto d = shifted_dim(inner, w, "InnerShift");
  return {std::make_shared<const OperatorNode>(
              OperatorNode{InnerShiftOp{std::move(inner), std::move(w)}}),
          d};
}

OperatorSpec OperatorSpec::outer_shift(OperatorSpec inner, Vector w) {
  const auto d = shifted_dim(inner, w, "OuterShift");
  return {std::make_shared<const OperatorNode>(
              OperatorNode{OuterShiftOp{std::move(inner), std::move(w)}}),
          d};
}

Vector resolvent(const OperatorSpec& op, const Vector& x) {
  if (op.dim() && *op.dim() != x.size()) {
    throw DimensionMismatch("resolvent: point of dimension " + std::to_string(x.size()) +
                            " for operator of dimension " + std::to_string(*op.dim()));
  }
  return resolvent_unchecked(op, x);
}

Vector reflected_resolvent(const OperatorSpec& op, const Vector& x) {
  return 2.0 * resolvent(op, x) - x;
}

Vector resolvent_skew_formula(double alpha, const Matrix& a, const Vector& x) {
  if (a.rows() != a.cols() || a.rows() != x.size()) {
    throw DimensionMismatch("resolvent_skew_formula: matrix and point dimensions disagree");
  }
  if (!(alpha >= 0.0)) throw PreconditionViolation("resolvent_skew_formula: alpha < 0");
  if ((a + a.transpose()).norm() > kSkewTol) {
    throw PreconditionViolation("resolvent_skew_formula: matrix is not skew");
  }
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  if ((a * a + alpha * id).norm() > kSkewTol) {
    throw PreconditionViolation("resolvent_skew_formula: A² differs from −alpha·Id");
  }
  return (x - a * x) / (1.0 + alpha);
}

double membership_residual(const OperatorSpec& op, const Vector& x, const Vector& xstar) {
  require_same_dim(x, xstar, "membership");
  return (resolvent(op, x + xstar) - x).norm() / (1.0 + x.norm());
}

bool membership(const OperatorSpec& op, const Vector& x, const Vector& xstar, double tol) {
  return membership_residual(op, x, xstar) <= tol;
}

std::string describe(const OperatorSpec& op) {
  return std::visit(
      overloaded{
          [](const NormalConeOp& n) -> std::string {
            static constexpr const char* names[] = {"Box", "Ball", "AffineSubspace", "Halfspace",
                                                    "EpigraphExp"};
            return std::string("NormalCone(") + names[n.set.variant().index()] + ")";
          },
          [](const AffineMonotoneOp&) -> std::string { return "AffineMonotone"; },
          [](const ConstantValuedOp&) -> std::string { return "ConstantValued"; },
          [](const ZeroOp&) -> std::string { return "Zero"; },
          [](const InverseOp& n) { return "Inverse(" + describe(n.inner) + ")"; },
          [](const FlipBothOp& n) { return "FlipBoth(" + describe(n.inner) + ")"; },
          [](const InnerShiftOp& n) { return "InnerShift(" + describe(n.inner) + ")"; },
          [](const OuterShiftOp& n) { return "OuterShift(" + describe(n.inner) + ")"; },
      },
      op.node().v);
}

}  // namespace normsplit
