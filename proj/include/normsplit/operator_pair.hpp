#pragma once

#include "normsplit/operators.hpp"

namespace normsplit {

/// Ordered pair (A, B) on a common ambient space. Order matters: the
/// Douglas–Rachford operator and the dual pair both depend on it.
class OperatorPair {
 public:
  /// Infers the dimension from A or B; throws if neither fixes it.
  OperatorPair(OperatorSpec a, OperatorSpec b);
  OperatorPair(OperatorSpec a, OperatorSpec b, Eigen::Index dim);

  const OperatorSpec& a() const { return a_; }
  const OperatorSpec& b() const { return b_; }
  Eigen::Index dim() const { return dim_; }

  /// (B, A)
  OperatorPair swapped() const { return {b_, a_, dim_}; }

 private:
  OperatorSpec a_;
  OperatorSpec b_;
  Eigen::Index dim_;
};

}  // namespace normsplit
