#pragma once

// Douglas–Rachford operator T = J_A R_B + Id − J_B of an ordered pair, the
// infimal displacement vector v(A,B) (minimal-norm element of the closure of
// ran(Id − T)), and the two-phase normal-problem solver: estimate v from the
// orbit x, Tx, T²x, ..., then iterate x ↦ T(x + v) and read the normal
// solution off the shadow J_B(x̂ + v).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normsplit/operator_pair.hpp"

namespace normsplit {

inline constexpr double kTolSym = 1e-5;

struct SolverOptions {
  std::int64_t max_iter = 200000;
  /// Window test on the difference estimator: ‖d_n − d_{n−window}‖ ≤ tol_v.
  double tol_v = 1e-8;
  /// Fixed-point residual ‖x − T(x + w)‖ accepted as converged.
  double tol_fix = 1e-9;
  int window = 50;
  /// Iterates beyond this norm count as divergence evidence.
  double r_max = 1e8;
  double tol_cert = kTolCert;
  /// Starting point; the origin when empty.
  std::optional<Vector> x0;
  /// Record every k-th step (plus the first and last); 0 disables recording.
  std::int64_t trace_stride = 0;
};

/// One recorded step n (0-based): the governing iterate xₙ, its shadow, the
/// displacement of the iterated map at xₙ, and both estimates of v.
struct IterationStep {
  std::int64_t n = 0;
  Vector x;
  Vector shadow;
  Vector displacement;
  Vector v_diff;
  Vector v_cesaro;
};

struct IterationTrace {
  std::vector<IterationStep> steps;
};

/// CSV with columns n, x1..xd, shadow1..shadowd, ‖displacement‖, ‖v_diff‖, ‖v_cesaro‖.
void write_trace_csv(const IterationTrace& trace, std::ostream& out);

struct DisplacementEstimate {
  Vector v;         // difference estimator Tⁿx − Tⁿ⁺¹x at termination
  Vector v_cesaro;  // (x − Tⁿ⁺¹x)/(n+1)
  double v_residual = 0.0;
  std::int64_t iterations = 0;
  bool window_converged = false;
  IterationTrace trace;
};

enum class SolveStatus { converged, no_fixed_point_detected, max_iter };

std::string to_string(SolveStatus status);
SolveStatus status_from_string(const std::string& name);

/// Outcome of the two membership checks k + w ∈ Bz and −k ∈ A(z − w).
struct Certificates {
  bool checked = false;
  bool b_side = false;
  bool a_side = false;
  double b_residual = 0.0;
  double a_residual = 0.0;

  bool passed() const { return checked && b_side && a_side; }
};

struct SolveReport {
  SolveStatus status = SolveStatus::max_iter;
  Vector w;  // perturbation in force
  Vector v_estimate;
  Vector v_cesaro;
  double v_residual = 0.0;
  std::optional<Vector> normal_solution;  // z
  std::optional<Vector> governing_point;  // x̂ with x̂ = T(x̂ + w)
  std::optional<Vector> dual_solution;    // k = x̂ − z
  Certificates certificates;
  double fixed_point_residual = 0.0;
  std::int64_t v_iterations = 0;
  std::int64_t fix_iterations = 0;
  std::int64_t iterations_used = 0;
  IterationTrace v_trace;
  IterationTrace fix_trace;
};

/// T x = J_A(R_B x) + x − J_B x.
Vector dr_apply(const OperatorPair& pair, const Vector& x);

/// x ↦ T(x + w), the Douglas–Rachford operator of the w-perturbation
/// (inner_perturb(A, w), outer_perturb(B, w)).
Vector dr_map_shifted(const OperatorPair& pair, const Vector& w, const Vector& x);

/// T_{(A⁻¹, B)} x, which equals x − T x.
Vector complement_is_dr(const OperatorPair& pair, const Vector& x);

/// Iterates T from x0 and returns the difference estimate of v(A,B).
DisplacementEstimate estimate_v(const OperatorPair& pair, const Vector& x0,
                                const SolverOptions& opts = {});

/// Finds a solution of w ∈ A(z − w) + Bz by iterating x ↦ T(x + w).
/// report.v_estimate is set to w.
SolveReport solve_perturbed(const OperatorPair& pair, const Vector& w,
                            const SolverOptions& opts = {});

/// Two phases: estimate v(A,B), then solve_perturbed at w = v.
SolveReport solve_normal(const OperatorPair& pair, const SolverOptions& opts = {});

struct SymmetryCheck {
  Vector v_ab;
  Vector v_ba;
  double norm_ab = 0.0;
  double norm_ba = 0.0;

  bool agrees(double tol = kTolSym) const;
};

/// Estimates v(A,B) and v(B,A); their norms coincide.
SymmetryCheck norm_symmetry_check(const OperatorPair& pair, const SolverOptions& opts = {});

/// For z with 0 ∈ Bz returns w = z − J_A z, a point of ran(Id − T).
/// Throws PreconditionViolation if 0 ∈ Bz cannot be certified.
Vector range_witness(const OperatorPair& pair, const Vector& z, double tol = kTolCert);

}  // namespace normsplit
