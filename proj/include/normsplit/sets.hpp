#pragma once

#include <variant>

#include "normsplit/vecspace.hpp"

namespace normsplit {

struct Box {
  Vector lo;
  Vector hi;
};

struct Ball {
  Vector center;
  double radius = 1.0;
};

/// anchor + span(columns of basis); the columns are orthonormal.
struct AffineSubspace {
  Vector anchor;
  Matrix basis;
};

/// {x : <normal, x> <= offset}
struct Halfspace {
  Vector normal;
  double offset = 0.0;
};

/// {(x, y) in R² : beta + exp(x) <= y}
struct EpigraphExp {
  double beta = 0.0;
};

/// Nonempty closed convex set with a computable nearest-point map.
/// Invariants are checked by the named constructors.
class ProjectableSet {
 public:
  using Variant = std::variant<Box, Ball, AffineSubspace, Halfspace, EpigraphExp>;

  static ProjectableSet box(Vector lo, Vector hi);
  static ProjectableSet ball(Vector center, double radius);
  static ProjectableSet affine_subspace(Vector anchor, Matrix basis);
  static ProjectableSet halfspace(Vector normal, double offset);
  static ProjectableSet epigraph_exp(double beta);

  const Variant& variant() const { return v_; }
  Eigen::Index dim() const;

 private:
  explicit ProjectableSet(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Nearest point of the set to x.
Vector project(const ProjectableSet& set, const Vector& x);

}  // namespace normsplit
