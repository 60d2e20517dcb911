#include "doctest.h"
#include "normsplit/perturb.hpp"
#include "support.hpp"

using namespace normsplit;
using namespace normsplit::testing;

namespace {

bool near(const Vector& x, const Vector& y, double tol) { return (x - y).norm() <= tol; }

// Direct pointwise evaluation of single-valued affine composites, independent
// of the resolvent machinery. The operator is x ↦ M x + a.
struct Affine {
  Matrix m;
  Vector a;
  Vector operator()(const Vector& x) const { return m * x + a; }
  Affine inverse() const {
    const Matrix mi = m.inverse();
    return {mi, -mi * a};
  }
  Affine flip() const { return {m, -a}; }
  Affine inner(const Vector& w) const { return {m, a - m * w}; }
  Affine outer(const Vector& w) const { return {m, a - w}; }
};

}  // namespace

TEST_CASE("inner perturbation") {
  Rng rng(31);
  const Vector w = vec({1, -2});
  const auto ball = ProjectableSet::ball(vec({0, 0}), 1);
  for (int i = 0; i < 20; ++i) {
    const Vector x = random_vector(rng, 2);
    CHECK(near(resolvent(inner_perturb(OperatorSpec::zero(), w), x), x, 1e-15));
    CHECK(near(resolvent(inner_perturb(OperatorSpec::normal_cone(ball), w), x),
               project(ball, x - w) + w, 0));
    CHECK(near(resolvent(inner_perturb(OperatorSpec::constant_valued(vec({3, 1})), w), x),
               x - vec({3, 1}), 1e-14));
  }
}

TEST_CASE("outer perturbation") {
  Rng rng(32);
  const Vector w = vec({1, -2});
  const auto a = vec({3, 1});
  for (const auto& [name, op] : operator_zoo(rng)) {
    CAPTURE(name);
    for (int i = 0; i < 20; ++i) {
      const Vector x = random_vector(rng, 2);
      CHECK(near(resolvent(outer_perturb(op, vec({0, 0})), x), resolvent(op, x), 0));
      CHECK(near(resolvent(inner_perturb(inner_perturb(op, w), -w), x), resolvent(op, x), 1e-12));
    }
  }
  const Vector x = vec({0.5, 4});
  CHECK(near(resolvent(outer_perturb(OperatorSpec::zero(), w), x), x + w, 0));
  CHECK(near(resolvent(outer_perturb(OperatorSpec::constant_valued(a), w), x), x - a + w, 1e-15));
  CHECK(near(resolvent(apply_shift(OperatorSpec::zero(), {w, ShiftDirection::outer}), x), x + w, 0));
  CHECK(near(resolvent(apply_shift(OperatorSpec::zero(), {w, ShiftDirection::inner}), x), x, 0));
}

TEST_CASE("perturbation calculus identities hold for every operator variant") {
  Rng rng(33);
  const auto zoo = operator_zoo(rng);
  for (int index = 1; index <= 6; ++index) {
    for (const auto& [name, op] : zoo) {
      CAPTURE(index);
      CAPTURE(name);
      const Vector w = random_vector(rng, 2, 1.5);
      const auto [lhs, rhs] = calculus_identity_pair(index, op, w);
      for (int i = 0; i < 50; ++i) {
        const Vector x = random_vector(rng, 2);
        CHECK(near(resolvent(lhs, x), resolvent(rhs, x), 1e-9));
      }
    }
  }
}

TEST_CASE("calculus identity special cases") {
  Rng rng(34);
  const auto ball = OperatorSpec::normal_cone(ProjectableSet::ball(vec({1, 0}), 2));
  const auto [l1, r1] = calculus_identity_pair(1, ball, vec({0, 0}));
  const auto [l3, r3] = calculus_identity_pair(3, OperatorSpec::zero(), vec({4, -1}));
  const auto a = vec({2, -3});
  const Vector w = vec({0.5, 1.5});
  const auto [l5, r5] = calculus_identity_pair(5, OperatorSpec::constant_valued(a), w);
  for (int i = 0; i < 20; ++i) {
    const Vector x = random_vector(rng, 2);
    const Vector inv = resolvent(OperatorSpec::inverse(ball), x);
    CHECK(near(resolvent(l1, x), inv, 1e-12));
    CHECK(near(resolvent(r1, x), inv, 1e-12));
    CHECK(near(resolvent(l3, x), x, 1e-14));
    CHECK(near(resolvent(r3, x), x, 1e-14));
    // The inverse of a constant a is the normal cone of {a}; flipped, of {−a}.
    // Shifting the constant's argument changes nothing on either side.
    CHECK(near(resolvent(l5, x), -a, 1e-10));
    CHECK(near(resolvent(r5, x), -a, 1e-10));
  }
  CHECK_THROWS_AS(calculus_identity_pair(0, ball, w), std::out_of_range);
  CHECK_THROWS_AS(calculus_identity_pair(7, ball, w), std::out_of_range);
}

TEST_CASE("dual of the perturbed pair") {
  Rng rng(35);
  const auto a = OperatorSpec::constant_valued(vec({1, 2}));
  const auto b = OperatorSpec::constant_valued(vec({-3, 0.5}));
  const auto ball = OperatorSpec::normal_cone(ProjectableSet::ball(vec({1, 0}), 2));
  const auto affine = OperatorSpec::affine_monotone(random_monotone(rng, 2, 1), vec({1, 1}));

  const auto [d0a, d0b] = dual_of_perturbed({ball, affine}, vec({0, 0}));
  const Vector w = vec({1, 0});
  const auto [dca, dcb] = dual_of_perturbed({a, b}, w);
  for (int i = 0; i < 50; ++i) {
    const Vector x = random_vector(rng, 2);
    CHECK(near(resolvent(d0a, x), resolvent(OperatorSpec::flip_both(OperatorSpec::inverse(ball)), x),
               1e-12));
    CHECK(near(resolvent(d0b, x), resolvent(OperatorSpec::inverse(affine), x), 1e-12));
    // Hand expansion: A^{−∨} of the constant a is N_{{−a}} so J = −a, shifted
    // outward by w gives −a; B⁻¹ = N_{{b}} shifted inward by −w gives b − w.
    CHECK(near(resolvent(dca, x), vec({-1, -2}), 1e-12));
    CHECK(near(resolvent(dcb, x), vec({-3, 0.5}) - w, 1e-12));
  }

  // Re-dualising recovers the perturbed pair (inner_perturb(A, w), outer_perturb(B, w)).
  const auto [pa, pb] = dual_of_perturbed({ball, affine}, w);
  const OperatorSpec ra = OperatorSpec::flip_both(OperatorSpec::inverse(pa));
  const OperatorSpec rb = OperatorSpec::inverse(pb);
  for (int i = 0; i < 50; ++i) {
    const Vector x = random_vector(rng, 2);
    CHECK(near(resolvent(ra, x), resolvent(inner_perturb(ball, w), x), 1e-10));
    CHECK(near(resolvent(rb, x), resolvent(outer_perturb(affine, w), x), 1e-10));
  }
}

TEST_CASE("shift order does not matter for single-valued sums") {
  Rng rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix ma = random_monotone(rng, 3, 3) + 0.5 * Matrix::Identity(3, 3);
    Matrix mb = random_monotone(rng, 3, 3) + 0.5 * Matrix::Identity(3, 3);
    const Affine a{ma, random_vector(rng, 3)};
    const Affine b{mb, random_vector(rng, 3)};
    const Vector w = random_vector(rng, 3);
    const Affine a_dual = a.inverse().flip();
    const Affine b_inv = b.inverse();
    for (int i = 0; i < 10; ++i) {
      const Vector x = random_vector(rng, 3);
      const Vector lhs = a_dual.inner(w)(x) + b_inv.outer(w)(x);
      const Vector rhs = a_dual.outer(w)(x - w) + b_inv.inner(-w)(x - w);
      CHECK(near(lhs, rhs, 1e-9 * (1.0 + lhs.norm())));
    }
    // The pointwise model agrees with the resolvent representation.
    const auto spec = OperatorSpec::flip_both(OperatorSpec::inverse(OperatorSpec::affine_monotone(ma, a.a)));
    const Vector u = random_vector(rng, 3);
    const Vector j = resolvent(spec, u);
    CHECK(near(j + a_dual(j), u, 1e-9 * (1.0 + u.norm())));
  }
}
