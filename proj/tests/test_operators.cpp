#include <cmath>

#include "doctest.h"
#include "normsplit/operators.hpp"
#include "support.hpp"

using namespace normsplit;
using namespace normsplit::testing;

namespace {

const Matrix kRot = mat({{0, -1}, {1, 0}});

bool near(const Vector& x, const Vector& y, double tol) { return (x - y).norm() <= tol; }

}  // namespace

TEST_CASE("set projections") {
  const auto box = ProjectableSet::box(vec({0, 0}), vec({1, 1}));
  CHECK(near(project(box, vec({2, 0.5})), vec({1, 0.5}), 0));
  CHECK(near(project(ProjectableSet::ball(vec({3, 0}), 1), vec({0, 0})), vec({2, 0}), 1e-15));
  CHECK(near(project(ProjectableSet::ball(vec({3, 0}), 1), vec({3.5, 0})), vec({3.5, 0}), 0));
  CHECK(near(project(line_through(vec({0, 0}), vec({1, 0})), vec({4, 7})), vec({4, 0}), 1e-15));
  const auto half = ProjectableSet::halfspace(vec({0, 2}), 2);
  CHECK(near(project(half, vec({5, 3})), vec({5, 1}), 1e-15));
  CHECK(near(project(half, vec({5, -3})), vec({5, -3}), 0));
  CHECK(box.dim() == 2);
  CHECK(ProjectableSet::epigraph_exp(0).dim() == 2);
  CHECK_THROWS_AS(project(box, vec({1, 2, 3})), DimensionMismatch);
}

TEST_CASE("epigraph projection satisfies the optimality conditions") {
  const double beta = 1.0;
  const auto epi = ProjectableSet::epigraph_exp(beta);
  CHECK(near(project(epi, vec({0, 5})), vec({0, 5}), 0));
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Vector x = random_vector(rng, 2, 4.0);
    const Vector p = project(epi, x);
    CHECK(beta + std::exp(p[0]) <= p[1] + 1e-12 * (1.0 + std::abs(p[1])));
    if (beta + std::exp(x[0]) <= x[1]) {
      CHECK(near(p, x, 0));
      continue;
    }
    // x − p is a nonnegative multiple of the outward normal (e^t, −1).
    const Vector r = x - p;
    const Vector normal = vec({std::exp(p[0]), -1.0});
    CHECK(std::abs(r[0] * normal[1] - r[1] * normal[0]) <= 1e-9 * (1.0 + r.norm() * normal.norm()));
    CHECK(r.dot(normal) >= -1e-12);
    // No sampled boundary point is closer.
    for (double t = p[0] - 2; t <= p[0] + 2; t += 0.125) {
      CHECK((x - vec({t, beta + std::exp(t)})).norm() >= r.norm() - 1e-12);
    }
  }
}

TEST_CASE("set constructors validate their invariants") {
  CHECK_THROWS(ProjectableSet::box(vec({1, 0}), vec({0, 1})));
  CHECK_THROWS(ProjectableSet::ball(vec({0, 0}), 0));
  CHECK_THROWS(ProjectableSet::ball(vec({0, 0}), -1));
  CHECK_THROWS(ProjectableSet::halfspace(vec({0, 0}), 1));
  CHECK_THROWS(ProjectableSet::epigraph_exp(-1));
  CHECK_THROWS(ProjectableSet::affine_subspace(vec({0, 0}), mat({{2}, {0}})));
  CHECK_THROWS(ProjectableSet::affine_subspace(vec({0, 0}), mat({{1, 1}, {0, 0}})));
  CHECK_THROWS_AS(ProjectableSet::affine_subspace(vec({0, 0}), mat({{1}, {0}, {0}})),
                  DimensionMismatch);
  CHECK_NOTHROW(ProjectableSet::affine_subspace(vec({0, 0}), Matrix(2, 0)));
}

TEST_CASE("resolvents of the leaf operators") {
  const auto rot = OperatorSpec::affine_monotone(kRot, vec({0, 0}));
  CHECK(near(resolvent(rot, vec({1, 0})), vec({0.5, -0.5}), 1e-15));
  CHECK(near(resolvent(OperatorSpec::constant_valued(vec({1, 1})), vec({3, 4})), vec({2, 3}), 0));
  CHECK(near(resolvent(OperatorSpec::inverse(OperatorSpec::zero()), vec({3, -4})), vec({0, 0}), 0));
  CHECK(near(resolvent(OperatorSpec::zero(), vec({3, -4})), vec({3, -4}), 0));
  const auto affine = OperatorSpec::affine_monotone(mat({{1, 0}, {0, 3}}), vec({1, 1}));
  CHECK(near(resolvent(affine, vec({3, 5})), vec({1, 1}), 1e-15));
}

TEST_CASE("reflected resolvent") {
  const auto rot = OperatorSpec::affine_monotone(kRot, vec({0, 0}));
  CHECK(near(reflected_resolvent(rot, vec({1, 0})), vec({0, -1}), 1e-15));
  CHECK(near(reflected_resolvent(OperatorSpec::zero(), vec({5, 6})), vec({5, 6}), 0));
  const auto axis = OperatorSpec::normal_cone(line_through(vec({0, 0}), vec({1, 0})));
  CHECK(near(reflected_resolvent(axis, vec({2, 3})), vec({2, -3}), 1e-15));
}

TEST_CASE("skew resolvent formula") {
  CHECK(near(resolvent_skew_formula(1, kRot, vec({1, 0})), vec({0.5, -0.5}), 1e-15));
  CHECK(near(resolvent_skew_formula(0, Matrix::Zero(2, 2), vec({7, 8})), vec({7, 8}), 0));
  CHECK(near(resolvent_skew_formula(4, 2 * kRot, vec({1, 0})), vec({0.2, -0.4}), 1e-15));
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const double s = 0.1 + trial * 0.2;
    const Vector x = random_vector(rng, 2);
    const Vector closed = resolvent_skew_formula(s * s, s * kRot, x);
    const Vector linear = resolvent(OperatorSpec::affine_monotone(s * kRot, vec({0, 0})), x);
    CHECK(near(closed, linear, 1e-10));
  }
  CHECK_THROWS_AS(resolvent_skew_formula(1, mat({{1, 0}, {0, 1}}), vec({1, 0})), PreconditionViolation);
  CHECK_THROWS_AS(resolvent_skew_formula(2, kRot, vec({1, 0})), PreconditionViolation);
  CHECK_THROWS_AS(resolvent_skew_formula(-1, kRot, vec({1, 0})), PreconditionViolation);
}

TEST_CASE("membership certificates") {
  CHECK(membership(OperatorSpec::zero(), vec({1, 2}), vec({0, 0})));
  CHECK_FALSE(membership(OperatorSpec::zero(), vec({1, 2}), vec({0, 1})));
  CHECK(membership(OperatorSpec::constant_valued(vec({1, 1})), vec({9, 9}), vec({1, 1})));
  const auto unit = OperatorSpec::normal_cone(ProjectableSet::box(vec({0}), vec({1})));
  CHECK(membership(unit, vec({1}), vec({5})));
  CHECK_FALSE(membership(unit, vec({1}), vec({-5})));
  CHECK_FALSE(membership(unit, vec({2}), vec({0})));
  CHECK(membership_residual(OperatorSpec::zero(), vec({0, 0}), vec({3, 4})) == doctest::Approx(5.0));
}

TEST_CASE("operator construction errors") {
  CHECK_THROWS_AS(OperatorSpec::affine_monotone(mat({{-1, 0}, {0, 1}}), vec({0, 0})),
                  PreconditionViolation);
  CHECK_THROWS_AS(OperatorSpec::affine_monotone(mat({{1, 0}}), vec({0})), DimensionMismatch);
  CHECK_NOTHROW(OperatorSpec::affine_monotone(mat({{0, 5}, {-5, 0}}), vec({0, 0})));
  const auto ball = OperatorSpec::normal_cone(ProjectableSet::ball(vec({0, 0}), 1));
  CHECK_THROWS_AS(OperatorSpec::inner_shift(ball, vec({1, 2, 3})), DimensionMismatch);
  CHECK_THROWS_AS(resolvent(ball, vec({1, 2, 3})), DimensionMismatch);
  CHECK_FALSE(OperatorSpec::zero().dim().has_value());
  CHECK(OperatorSpec::inverse(ball).dim() == 2);
  CHECK(describe(OperatorSpec::flip_both(OperatorSpec::inverse(ball))) ==
        "FlipBoth(Inverse(NormalCone(Ball)))");
}

TEST_CASE("every operator has a firmly nonexpansive resolvent") {
  Rng rng(23);
  for (const auto& [name, op] : operator_zoo(rng)) {
    CAPTURE(name);
    for (int i = 0; i < 100; ++i) {
      const Vector x = random_vector(rng, 2);
      const Vector y = random_vector(rng, 2);
      const Vector jx = resolvent(op, x);
      const Vector jy = resolvent(op, y);
      const double lhs = (jx - jy).squaredNorm() + ((x - jx) - (y - jy)).squaredNorm();
      CHECK(lhs <= (x - y).squaredNorm() + 1e-9);
      CHECK((reflected_resolvent(op, x) - reflected_resolvent(op, y)).norm() <=
            (x - y).norm() + 1e-9);
    }
  }
}

TEST_CASE("resolvent algebra identities") {
  Rng rng(24);
  for (const auto& [name, op] : operator_zoo(rng)) {
    CAPTURE(name);
    const auto inv = OperatorSpec::inverse(op);
    const auto flip2 = OperatorSpec::flip_both(OperatorSpec::flip_both(op));
    const auto flip_inv = OperatorSpec::flip_both(OperatorSpec::inverse(op));
    const auto inv_flip = OperatorSpec::inverse(OperatorSpec::flip_both(op));
    for (int i = 0; i < 100; ++i) {
      const Vector x = random_vector(rng, 2);
      CHECK(near(resolvent(op, x) + resolvent(inv, x), x, 1e-10));
      CHECK(near(resolvent(flip2, x), resolvent(op, x), 1e-12));
      CHECK(near(resolvent(flip_inv, x), resolvent(inv_flip, x), 1e-10));
    }
  }
}

TEST_CASE("certified graph points are monotone") {
  Rng rng(25);
  for (const auto& [name, op] : operator_zoo(rng)) {
    CAPTURE(name);
    // (J u, u − J u) lies on the graph for every u.
    std::vector<std::pair<Vector, Vector>> graph;
    for (int i = 0; i < 100; ++i) {
      const Vector u = random_vector(rng, 2);
      const Vector x = resolvent(op, u);
      const Vector xs = u - x;
      REQUIRE(membership(op, x, xs));
      graph.emplace_back(x, xs);
    }
    for (std::size_t i = 0; i < graph.size(); ++i) {
      for (std::size_t j = i + 1; j < graph.size(); ++j) {
        CHECK(dot(graph[i].first - graph[j].first, graph[i].second - graph[j].second) >= -1e-8);
      }
    }
  }
}
