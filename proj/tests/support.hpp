#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "normsplit/operators.hpp"
#include "normsplit/operator_pair.hpp"
#include "normsplit/perturb.hpp"

namespace normsplit::testing {

using Rng = std::mt19937_64;

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Vector random_vector(Rng& rng, Eigen::Index n, double scale = 3.0) {
  std::normal_distribution<double> g(0.0, scale);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = g(rng);
  return v;
}

inline Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = g(rng);
  return m;
}

/// S Sᵀ + K with S of the given rank and K skew; monotone, possibly singular.
inline Matrix random_monotone(Rng& rng, Eigen::Index n, Eigen::Index rank) {
  const Matrix s = random_matrix(rng, n, rank);
  const Matrix k = random_matrix(rng, n, n);
  return s * s.transpose() + 0.5 * (k - k.transpose());
}

inline ProjectableSet line_through(const Vector& anchor, const Vector& direction) {
  Matrix basis(direction.size(), 1);
  basis.col(0) = direction.normalized();
  return ProjectableSet::affine_subspace(anchor, basis);
}

struct NamedOperator {
  std::string name;
  OperatorSpec op;
};

/// One operator of every variant in dimension 2, plus nested composites.
inline std::vector<NamedOperator> operator_zoo(Rng& rng) {
  std::vector<NamedOperator> out;
  const Vector w = random_vector(rng, 2, 1.0);
  out.push_back({"ball", OperatorSpec::normal_cone(ProjectableSet::ball(vec({1, -1}), 1.5))});
  out.push_back({"box", OperatorSpec::normal_cone(ProjectableSet::box(vec({0, -1}), vec({2, 1})))});
  out.push_back({"line", OperatorSpec::normal_cone(line_through(vec({0, 1}), vec({1, 2})))});
  out.push_back({"halfspace",
                 OperatorSpec::normal_cone(ProjectableSet::halfspace(vec({1, 1}), 0.5))});
  out.push_back({"epigraph", OperatorSpec::normal_cone(ProjectableSet::epigraph_exp(1.0))});
  out.push_back({"affine", OperatorSpec::affine_monotone(random_monotone(rng, 2, 1),
                                                          random_vector(rng, 2, 1.0))});
  out.push_back({"rotator", OperatorSpec::affine_monotone(mat({{0, -1}, {1, 0}}), vec({0, 0}))});
  out.push_back({"constant", OperatorSpec::constant_valued(vec({1, 2}))});
  out.push_back({"zero", OperatorSpec::zero()});
  const OperatorSpec ball = out[0].op;
  out.push_back({"inverse", OperatorSpec::inverse(ball)});
  out.push_back({"flip", OperatorSpec::flip_both(out[5].op)});
  out.push_back({"inner", OperatorSpec::inner_shift(out[1].op, w)});
  out.push_back({"outer", OperatorSpec::outer_shift(out[4].op, w)});
  out.push_back({"nested", OperatorSpec::flip_both(OperatorSpec::inverse(
                               OperatorSpec::inner_shift(out[6].op, -w)))});
  return out;
}

struct NamedPair {
  std::string name;
  OperatorPair pair;
};

/// Representatives of every scenario family plus composite operators.
inline std::vector<NamedPair> pair_families(Rng& rng) {
  using S = ProjectableSet;
  auto cone = [](const ProjectableSet& s) { return OperatorSpec::normal_cone(s); };
  const Matrix rot = mat({{0, -1}, {1, 0}});
  std::vector<NamedPair> out;
  out.push_back({"overlapping-balls", {cone(S::ball(vec({0, 0}), 2)), cone(S::ball(vec({3, 0}), 2))}});
  out.push_back({"disjoint-balls", {cone(S::ball(vec({0, 0}), 1)), cone(S::ball(vec({3, 0}), 1))}});
  out.push_back({"two-lines", {cone(line_through(vec({0, 0}), vec({1, 0}))),
                               cone(line_through(vec({0, 1}), vec({1, 0})))}});
  out.push_back({"box-halfspace", {cone(S::box(vec({0, 0}), vec({1, 1}))),
                                   cone(S::halfspace(vec({-1, -1}), -3))}});
  out.push_back({"epigraph", {cone(line_through(vec({0, 0}), vec({1, 0}))), cone(S::epigraph_exp(1))}});
  out.push_back({"rotators", {OperatorSpec::affine_monotone(rot, vec({1, 0})),
                              OperatorSpec::affine_monotone(-rot, vec({0, 0}))}});
  out.push_back({"constants", {OperatorSpec::constant_valued(vec({1, 2})),
                               OperatorSpec::constant_valued(vec({3, 4}))}});
  out.push_back({"least-squares", {OperatorSpec::constant_valued(vec({-1, -1})),
                                   OperatorSpec::affine_monotone(mat({{1, 0}, {0, 0}}), vec({0, 0}))}});
  out.push_back({"affine-singular", {OperatorSpec::affine_monotone(random_monotone(rng, 2, 1), random_vector(rng, 2, 1)),
                                     OperatorSpec::affine_monotone(random_monotone(rng, 2, 1), random_vector(rng, 2, 1))}});
  const auto zoo = operator_zoo(rng);
  out.push_back({"composites", {zoo[13].op, zoo[11].op}});
  out.push_back({"ball-zero", {zoo[0].op, OperatorSpec::zero()}});
  return out;
}

}  // namespace normsplit::testing
