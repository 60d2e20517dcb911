#include "normsplit/sets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normsplit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kOrthonormalTol = 1e-12;
constexpr double kEpigraphResidual = 1e-12;
constexpr int kEpigraphMaxSteps = 200;

// Stationarity condition of t ↦ (t−p)² + (beta + eᵗ − q)² for the nearest
// boundary point (t, beta + eᵗ) of the epigraph.
struct EpigraphStationarity {
  double p, q, beta;
  double value(double t) const {
    const double e = std::exp(t);
    return t - p + (beta + e - q) * e;
  }
  double slope(double t) const {
    const double e = std::exp(t);
    return 1.0 + e * (beta - q + 2.0 * e);
  }
};

Vector project_epigraph(double beta, const Vector& x) {
  const double p = x[0];
  const double q = x[1];
  if (q >= beta + std::exp(p)) return x;

  const EpigraphStationarity f{p, q, beta};
  // f(hi) >= 0 at either candidate; the second keeps exp() finite for large p.
  double hi = std::min(p, std::log(std::max(q - beta, 1.0) + 1.0 + std::abs(p)));
  double step = 1.0;
  double lo = hi - step;
  while (f.value(lo) >= 0.0) {
    step *= 2.0;
    lo = hi - step;
  }

  double t = 0.5 * (lo + hi);
  for (int i = 0; i < kEpigraphMaxSteps; ++i) {
    const double ft = f.value(t);
    if (std::abs(ft) <= kEpigraphResidual) break;
    if (ft > 0.0) {
      hi = t;
    } else {
      lo = t;
    }
    if (hi - lo <= 1e-16 * (1.0 + std::abs(t))) break;
    double next = t - ft / f.slope(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  Vector out(2);
  out << t, beta + std::exp(t);
  return out;
}

}  // namespace

ProjectableSet ProjectableSet::box(Vector lo, Vector hi) {
  require_same_dim(lo, hi, "Box");
  require_finite(lo, "Box.lo");
  require_finite(hi, "Box.hi");
  if (lo.size() == 0) throw std::invalid_argument("Box: empty dimension");
  if ((lo.array() > hi.array()).any()) throw std::invalid_argument("Box: lo > hi");
  return ProjectableSet(Box{std::move(lo), std::move(hi)});
}

ProjectableSet ProjectableSet::ball(Vector center, double radius) {
  require_finite(center, "Ball.center");
  if (center.size() == 0) throw std::invalid_argument("Ball: empty dimension");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("Ball: radius must be positive and finite");
  }
  return ProjectableSet(Ball{std::move(center), radius});
}

ProjectableSet ProjectableSet::affine_subspace(Vector anchor, Matrix basis) {
  require_finite(anchor, "AffineSubspace.anchor");
  require_finite(basis, "AffineSubspace.basis");
  if (anchor.size() == 0) throw std::invalid_argument("AffineSubspace: empty dimension");
  if (basis.cols() > 0 && basis.rows() != anchor.size()) {
    throw DimensionMismatch("AffineSubspace: basis vectors do not match anchor dimension");
  }
  if (basis.cols() == 0) basis.resize(anchor.size(), 0);
  const Matrix gram = basis.transpose() * basis;
  const Matrix eye = Matrix::Identity(basis.cols(), basis.cols());
  if (basis.cols() > 0 && (gram - eye).cwiseAbs().maxCoeff() > kOrthonormalTol) {
    throw std::invalid_argument("AffineSubspace: basis is not orthonormal");
  }
  return ProjectableSet(AffineSubspace{std::move(anchor), std::move(basis)});
}

ProjectableSet ProjectableSet::halfspace(Vector normal, double offset) {
  require_finite(normal, "Halfspace.normal");
  if (normal.size() == 0) throw std::invalid_argument("Halfspace: empty dimension");
  if (!std::isfinite(offset)) throw std::invalid_argument("Halfspace: non-finite offset");
  if (normal.norm() == 0.0) throw std::invalid_argument("Halfspace: zero normal");
  return ProjectableSet(Halfspace{std::move(normal), offset});
}

ProjectableSet ProjectableSet::epigraph_exp(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("EpigraphExp: beta must be nonnegative and finite");
  }
  return ProjectableSet(EpigraphExp{beta});
}

Eigen::Index ProjectableSet::dim() const {
  return std::visit(overloaded{
                        [](const Box& s) { return s.lo.size(); },
                        [](const Ball& s) { return s.center.size(); },
                        [](const AffineSubspace& s) { return s.anchor.size(); },
                        [](const Halfspace& s) { return s.normal.size(); },
                        [](const EpigraphExp&) { return Eigen::Index{2}; },
                    },
                    v_);
}

Vector project(const ProjectableSet& set, const Vector& x) {
  if (x.size() != set.dim()) {
    throw DimensionMismatch("project: point of dimension " + std::to_string(x.size()) +
                            " onto set of dimension " + std::to_string(set.dim()));
  }
  return std::visit(
      overloaded{
          [&](const Box& s) -> Vector { return x.cwiseMax(s.lo).cwiseMin(s.hi); },
          [&](const Ball& s) -> Vector {
            const Vector d = x - s.center;
            const double dist = d.norm();
            if (dist <= s.radius) return x;
            return s.center + (s.radius / dist) * d;
          },
          [&](const AffineSubspace& s) -> Vector {
            return s.anchor + s.basis * (s.basis.transpose() * (x - s.anchor));
          },
          [&](const Halfspace& s) -> Vector {
            const double excess = s.normal.dot(x) - s.offset;
            if (excess <= 0.0) return x;
            return x - (excess / s.normal.squaredNorm()) * s.normal;
          },
          [&](const EpigraphExp& s) -> Vector { return project_epigraph(s.beta, x); },
      },
      set.variant());
}

}  // namespace normsplit
