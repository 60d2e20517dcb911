#include "normsplit/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace normsplit {

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

ProjectableSet horizontal_line(double height) {
  Matrix basis(2, 1);
  basis << 1.0, 0.0;
  return ProjectableSet::affine_subspace(vec({0.0, height}), basis);
}

}  // namespace

Matrix rotator() { return mat2(0.0, -1.0, 1.0, 0.0); }

GapResult alternating_projections(const ProjectableSet& u, const ProjectableSet& v,
                                  std::int64_t budget, double tol) {
  if (u.dim() != v.dim()) throw DimensionMismatch("alternating_projections: set dimensions");
  GapResult out;
  Vector b = project(v, Vector::Zero(v.dim()));
  Vector a = project(u, b);
  for (std::int64_t n = 0; n < budget; ++n) {
    Vector next = project(v, a);
    const double step = (next - b).norm();
    b = std::move(next);
    a = project(u, b);
    out.iterations = n + 1;
    if (step <= tol) {
      out.attained = true;
      break;
    }
  }
  out.gap = b - a;
  out.v_side = b;
  out.u_side = a;
  return out;
}

std::pair<Vector, Vector> affine_qp_oracle(const Matrix& l, const Vector& a, const Matrix& m,
                                           const Vector& b) {
  const Eigen::Index n = a.size();
  const Matrix id = Matrix::Identity(n, n);
  const Vector c = a + b;
  // (Id + L)w − c must lie in ran(L + M); project that condition out.
  const Matrix range = range_basis(l + m);
  const Matrix complement = id - range * range.transpose();
  Vector w = least_norm(complement * (id + l), complement * c);
  Vector x = least_norm(l + m, (id + l) * w - c);
  return {std::move(w), std::move(x)};
}

Scenario scenario_two_sets(const ProjectableSet& u, const ProjectableSet& v, std::string name,
                           double tolerance) {
  if (u.dim() != v.dim()) throw DimensionMismatch("scenario_two_sets: set dimensions differ");
  Scenario s{std::move(name),
             "normal cones of two closed convex sets",
             OperatorPair(OperatorSpec::normal_cone(u), OperatorSpec::normal_cone(v)),
             tolerance,
             {},
             {}};
  s.oracle = [u, v] {
    const GapResult gap = alternating_projections(u, v);
    OracleResult r;
    r.v = gap.gap;
    r.v_reverse = -gap.gap;
    r.solution_exists = gap.attained;
    if (gap.attained) r.normal_solution = gap.v_side;
    r.provenance = "alternating projections, " + std::to_string(gap.iterations) + " iterations" +
                   (gap.attained ? "" : ", gap not attained within budget");
    return r;
  };
  s.solution_error = [u, v](const Vector& z) { return (project(v, project(u, z)) - z).norm(); };
  return s;
}

Scenario scenario_affine(const Matrix& l, const Vector& astar, const Matrix& m,
                         const Vector& bstar, std::string name) {
  Scenario s{std::move(name),
             "affine monotone pair Ax = Lx + a*, Bx = Mx + b*",
             OperatorPair(OperatorSpec::affine_monotone(l, astar),
                          OperatorSpec::affine_monotone(m, bstar)),
             1e-5,
             {},
             {}};
  s.oracle = [l, astar, m, bstar] {
    auto [w, x] = affine_qp_oracle(l, astar, m, bstar);
    OracleResult r;
    r.v = std::move(w);
    r.v_reverse = affine_qp_oracle(m, bstar, l, astar).first;
    r.normal_solution = std::move(x);
    r.provenance = "least-norm quadratic program in (w, x)";
    return r;
  };
  s.solution_error = [l, astar, m, bstar](const Vector& z) {
    const Vector w = affine_qp_oracle(l, astar, m, bstar).first;
    const Matrix id = Matrix::Identity(w.size(), w.size());
    return ((id + l) * w - (l + m) * z - astar - bstar).norm();
  };
  return s;
}

Scenario scenario_rotators(const Vector& astar, const Vector& bstar, std::string name) {
  if (astar.size() != 2 || bstar.size() != 2) {
    throw DimensionMismatch("scenario_rotators: a* and b* must be two-dimensional");
  }
  const Matrix rot = rotator();
  Scenario s = scenario_affine(rot, astar, -rot, -bstar, std::move(name));
  s.description = "rotator pair Ax = Lx + a*, Bx = −Lx − b*";
  s.tolerance = 1e-7;
  s.oracle = [astar, bstar, rot] {
    const Matrix id = Matrix::Identity(2, 2);
    OracleResult r;
    r.v = 0.5 * (id - rot) * (astar - bstar);
    r.v_reverse = 0.5 * (id + rot) * (astar - bstar);
    r.normal_solution = Vector::Zero(2);
    r.provenance = "closed forms ½(Id−L)(a*−b*) and ½(Id+L)(a*−b*); every x is a normal solution";
    return r;
  };
  return s;
}

Scenario scenario_constants(const Vector& astar, const Vector& bstar, std::string name) {
  require_same_dim(astar, bstar, "scenario_constants");
  Scenario s{std::move(name),
             "constant operators gra A = X × {a*}, gra B = X × {b*}",
             OperatorPair(OperatorSpec::constant_valued(astar),
                          OperatorSpec::constant_valued(bstar)),
             1e-9,
             {},
             {}};
  s.oracle = [astar, bstar] {
    OracleResult r;
    r.v = astar + bstar;
    r.v_reverse = astar + bstar;
    r.normal_solution = Vector::Zero(astar.size());
    r.provenance = "ran(Id − T) ⊆ {a* + b*}; every x is a normal solution";
    return r;
  };
  s.solution_error = [](const Vector&) { return 0.0; };
  return s;
}

Scenario scenario_least_squares(const Matrix& m, const Vector& b, std::string name) {
  Scenario s{std::move(name),
             "least squares: Ax = −b, Bx = Mx",
             OperatorPair(OperatorSpec::constant_valued(-b),
                          OperatorSpec::affine_monotone(m, Vector::Zero(b.size()))),
             1e-7,
             {},
             {}};
  s.oracle = [m, b] {
    OracleResult r;
    r.v = project_range(m, b) - b;
    r.normal_solution = least_norm(m.transpose() * m, m.transpose() * b);
    r.provenance = "P_ran M(b) − b and the normal equations MᵀMx = Mᵀb";
    return r;
  };
  s.solution_error = [m, b](const Vector& z) {
    return (m.transpose() * (m * z - b)).norm();
  };
  return s;
}

std::vector<std::string> scenario_names() {
  return {"overlapping-balls", "disjoint-balls",      "two-lines",        "box-halfspace",
          "epigraph",          "rotators-default",    "constants-default", "least-squares-default",
          "affine-rotator"};
}

Scenario make_scenario(const std::string& name) {
  if (name == "overlapping-balls") {
    return scenario_two_sets(ProjectableSet::ball(vec({0, 0}), 2.0),
                             ProjectableSet::ball(vec({3, 0}), 2.0), name);
  }
  if (name == "disjoint-balls") {
    return scenario_two_sets(ProjectableSet::ball(vec({0, 0}), 1.0),
                             ProjectableSet::ball(vec({3, 0}), 1.0), name);
  }
  if (name == "two-lines") {
    return scenario_two_sets(horizontal_line(0.0), horizontal_line(1.0), name);
  }
  if (name == "box-halfspace") {
    return scenario_two_sets(ProjectableSet::box(vec({0, 0}), vec({1, 1})),
                             ProjectableSet::halfspace(vec({-1, -1}), -3.0), name);
  }
  if (name == "epigraph") {
    return scenario_two_sets(horizontal_line(0.0), ProjectableSet::epigraph_exp(1.0), name, 5e-2);
  }
  if (name == "rotators-default") return scenario_rotators(vec({1, 0}), vec({0, 0}), name);
  if (name == "constants-default") return scenario_constants(vec({1, 2}), vec({3, 4}), name);
  if (name == "least-squares-default") {
    return scenario_least_squares(mat2(1, 0, 0, 0), vec({1, 1}), name);
  }
  if (name == "affine-rotator") {
    const Matrix rot = rotator();
    return scenario_affine(rot, vec({1, 0}), -rot, vec({0, 0}), name);
  }
  throw std::out_of_range("unknown scenario '" + name + "'");
}

}  // namespace normsplit
