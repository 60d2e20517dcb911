#pragma once

// Worked problem instances with closed-form or classically computed answers.
// Oracles here never touch the Douglas–Rachford machinery; this header must
// not include splitting.hpp.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "normsplit/operator_pair.hpp"

namespace normsplit {

struct OracleResult {
  std::optional<Vector> v;          // v(A,B)
  std::optional<Vector> v_reverse;  // v(B,A)
  /// Representative normal solution; absent when none exists or none is computed.
  std::optional<Vector> normal_solution;
  bool solution_exists = true;
  std::string provenance;
};

struct Scenario {
  std::string name;
  std::string description;
  OperatorPair pair;
  /// Tolerance on ‖v_estimate − v‖.
  double tolerance = 1e-6;
  std::function<OracleResult()> oracle;
  /// Distance-like violation of the normal-solution conditions at a candidate z,
  /// computed from oracle data only.
  std::function<double(const Vector&)> solution_error;
};

struct GapResult {
  Vector gap;      // v_side − u_side
  Vector v_side;   // limit point in V, a fixed point of P_V P_U when attained
  Vector u_side;
  std::int64_t iterations = 0;
  bool attained = false;
};

/// b ← P_V(P_U b) from P_V(0) until ‖Δb‖ ≤ tol or the budget is spent.
GapResult alternating_projections(const ProjectableSet& u, const ProjectableSet& v,
                                  std::int64_t budget = 1000000, double tol = 1e-12);

/// Least-norm w with (Id + L)w − (L + M)x = a + b for some x; returns (w, x).
std::pair<Vector, Vector> affine_qp_oracle(const Matrix& l, const Vector& a, const Matrix& m,
                                           const Vector& b);

/// (ξ, η) ↦ (−η, ξ)
Matrix rotator();

Scenario scenario_two_sets(const ProjectableSet& u, const ProjectableSet& v,
                           std::string name = "two-sets", double tolerance = 1e-6);
Scenario scenario_rotators(const Vector& astar, const Vector& bstar,
                           std::string name = "rotators");
Scenario scenario_constants(const Vector& astar, const Vector& bstar,
                            std::string name = "constants");
Scenario scenario_least_squares(const Matrix& m, const Vector& b,
                                std::string name = "least-squares");
Scenario scenario_affine(const Matrix& l, const Vector& astar, const Matrix& m,
                         const Vector& bstar, std::string name = "affine");

std::vector<std::string> scenario_names();
/// Throws std::out_of_range for names not in scenario_names().
Scenario make_scenario(const std::string& name);

}  // namespace normsplit
