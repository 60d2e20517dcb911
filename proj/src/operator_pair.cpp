#include "normsplit/operator_pair.hpp"

#include <string>

namespace normsplit {

namespace {

Eigen::Index infer_dim(const OperatorSpec& a, const OperatorSpec& b) {
  if (a.dim()) return *a.dim();
  if (b.dim()) return *b.dim();
  throw std::invalid_argument("OperatorPair: dimension cannot be inferred from (Zero, Zero)");
}

}  // namespace

OperatorPair::OperatorPair(OperatorSpec a, OperatorSpec b)
    : OperatorPair(a, b, infer_dim(a, b)) {}

OperatorPair::OperatorPair(OperatorSpec a, OperatorSpec b, Eigen::Index dim)
    : a_(std::move(a)), b_(std::move(b)), dim_(dim) {
  if (dim_ <= 0) throw std::invalid_argument("OperatorPair: dimension must be positive");
  for (const auto* op : {&a_, &b_}) {
    if (op->dim() && *op->dim() != dim_) {
      throw DimensionMismatch("OperatorPair: operator of dimension " + std::to_string(*op->dim()) +
                              " in a pair of dimension " + std::to_string(dim_));
    }
  }
}

}  // namespace normsplit
