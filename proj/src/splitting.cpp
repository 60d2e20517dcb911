#include "normsplit/splitting.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace normsplit {

namespace {

// Persistent-drift test applied when the budget runs out: the net movement
// over the second half of the run is at least as large as over the preceding
// quarter, and coherent relative to the final step size.
constexpr double kDriftRatio = 0.9;
constexpr double kDriftCoherence = 0.25;

struct DrEvaluation {
  Vector tx;
  Vector shadow;  // J_B x
};

DrEvaluation dr_evaluate(const OperatorPair& pair, const Vector& x) {
  Vector shadow = resolvent(pair.b(), x);
  Vector tx = resolvent(pair.a(), 2.0 * shadow - x) + x - shadow;
  return {std::move(tx), std::move(shadow)};
}

void require_pair_dim(const OperatorPair& pair, const Vector& x, const char* what) {
  if (x.size() != pair.dim()) {
    throw DimensionMismatch(std::string(what) + ": vector of dimension " +
                            std::to_string(x.size()) + " for pair of dimension " +
                            std::to_string(pair.dim()));
  }
}

Vector start_point(const OperatorPair& pair, const SolverOptions& opts) {
  if (!opts.x0) return Vector::Zero(pair.dim());
  require_pair_dim(pair, *opts.x0, "x0");
  require_finite(*opts.x0, "x0");
  return *opts.x0;
}

void validate_options(const SolverOptions& opts) {
  if (opts.max_iter < 1) throw PreconditionViolation("max_iter must be at least 1");
  if (opts.window < 1) throw PreconditionViolation("window must be at least 1");
  if (!(opts.tol_v >= 0.0) || !(opts.tol_fix >= 0.0)) {
    throw PreconditionViolation("tolerances must be nonnegative");
  }
  if (opts.trace_stride < 0) throw PreconditionViolation("trace_stride must be nonnegative");
}

bool should_record(const SolverOptions& opts, std::int64_t n, bool last) {
  if (opts.trace_stride == 0) return false;
  return n == 0 || last || n % opts.trace_stride == 0;
}

}  // namespace

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::converged:
      return "converged";
    case SolveStatus::no_fixed_point_detected:
      return "no_fixed_point_detected";
    case SolveStatus::max_iter:
      return "max_iter";
  }
  return "unknown";
}

SolveStatus status_from_string(const std::string& name) {
  if (name == "converged") return SolveStatus::converged;
  if (name == "no_fixed_point_detected") return SolveStatus::no_fixed_point_detected;
  if (name == "max_iter") return SolveStatus::max_iter;
  throw std::invalid_argument("unknown solve status '" + name + "'");
}

void write_trace_csv(const IterationTrace& trace, std::ostream& out) {
  const Eigen::Index dim = trace.steps.empty() ? 0 : trace.steps.front().x.size();
  out << "n";
  for (Eigen::Index i = 1; i <= dim; ++i) out << ",x" << i;
  for (Eigen::Index i = 1; i <= dim; ++i) out << ",shadow" << i;
  out << ",displacement_norm,v_diff_norm,v_cesaro_norm\n";

  char buf[32];
  auto put = [&](double value) {
    std::snprintf(buf, sizeof(buf), ",%.17g", value);
    out << buf;
  };
  for (const auto& s : trace.steps) {
    out << s.n;
    for (Eigen::Index i = 0; i < dim; ++i) put(s.x[i]);
    for (Eigen::Index i = 0; i < dim; ++i) put(s.shadow[i]);
    put(s.displacement.norm());
    put(s.v_diff.norm());
    put(s.v_cesaro.norm());
    out << '\n';
  }
}

Vector dr_apply(const OperatorPair& pair, const Vector& x) {
  require_pair_dim(pair, x, "dr_apply");
  return dr_evaluate(pair, x).tx;
}

Vector dr_map_shifted(const OperatorPair& pair, const Vector& w, const Vector& x) {
  require_pair_dim(pair, w, "dr_map_shifted");
  return dr_apply(pair, x + w);
}

Vector complement_is_dr(const OperatorPair& pair, const Vector& x) {
  return dr_apply(OperatorPair(OperatorSpec::inverse(pair.a()), pair.b(), pair.dim()), x);
}

DisplacementEstimate estimate_v(const OperatorPair& pair, const Vector& x0,
                                const SolverOptions& opts) {
  validate_options(opts);
  require_pair_dim(pair, x0, "estimate_v");
  require_finite(x0, "x0");

  const auto ring_size = static_cast<std::size_t>(opts.window) + 1;
  std::vector<Vector> recent(ring_size);

  DisplacementEstimate out;
  Vector x = x0;
  for (std::int64_t n = 0; n < opts.max_iter; ++n) {
    DrEvaluation ev = dr_evaluate(pair, x);
    Vector d = x - ev.tx;
    const auto slot = static_cast<std::size_t>(n) % ring_size;
    recent[slot] = d;
    bool settled = false;
    if (n >= opts.window) {
      const auto old = static_cast<std::size_t>(n - opts.window) % ring_size;
      settled = (d - recent[old]).norm() <= opts.tol_v;
    }
    const bool last = settled || n + 1 == opts.max_iter;
    Vector cesaro = (x0 - ev.tx) / static_cast<double>(n + 1);

    if (should_record(opts, n, last)) {
      out.trace.steps.push_back({n, x, ev.shadow, d, d, cesaro});
    }
    x = std::move(ev.tx);
    if (last) {
      out.v = std::move(d);
      out.v_cesaro = std::move(cesaro);
      out.v_residual = (out.v - out.v_cesaro).norm();
      out.iterations = n + 1;
      out.window_converged = settled;
      break;
    }
  }
  return out;
}

SolveReport solve_perturbed(const OperatorPair& pair, const Vector& w, const SolverOptions& opts) {
  validate_options(opts);
  require_pair_dim(pair, w, "solve_perturbed");
  require_finite(w, "w");
  const Vector x0 = start_point(pair, opts);

  SolveReport report;
  report.w = w;
  report.v_estimate = w;

  const std::int64_t quarter = opts.max_iter / 4;
  const std::int64_t half = opts.max_iter / 2;
  Vector at_quarter = x0;
  Vector at_half = x0;

  Vector x = x0;
  double residual = 0.0;
  std::int64_t n = 0;
  bool done = false;
  for (; n < opts.max_iter && !done; ++n) {
    if (n == quarter) at_quarter = x;
    if (n == half) at_half = x;

    DrEvaluation ev = dr_evaluate(pair, x + w);
    Vector d = x - ev.tx;
    residual = d.norm();

    if (residual <= opts.tol_fix) {
      const Vector& x_hat = ev.tx;
      Vector z = resolvent(pair.b(), x_hat + w);
      Vector k = x_hat - z;
      Certificates cert;
      cert.checked = true;
      cert.b_residual = membership_residual(pair.b(), z, k + w);
      cert.a_residual = membership_residual(pair.a(), z - w, -k);
      cert.b_side = cert.b_residual <= opts.tol_cert;
      cert.a_side = cert.a_residual <= opts.tol_cert;
      if (cert.passed()) {
        report.status = SolveStatus::converged;
        report.certificates = cert;
        report.fixed_point_residual = (x_hat - dr_map_shifted(pair, w, x_hat)).norm();
        report.normal_solution = std::move(z);
        report.dual_solution = std::move(k);
        report.governing_point = x_hat;
        done = true;
      }
    }
    if (!done && (!ev.tx.allFinite() || ev.tx.norm() > opts.r_max)) {
      report.status = SolveStatus::no_fixed_point_detected;
      done = true;
    }

    const bool last = done || n + 1 == opts.max_iter;
    Vector cesaro = w + (x0 - ev.tx) / static_cast<double>(n + 1);
    if (should_record(opts, n, last)) {
      report.fix_trace.steps.push_back({n, x, ev.shadow, d, w + d, cesaro});
    }
    if (last) {
      report.v_cesaro = std::move(cesaro);
      report.v_residual = (w + d - report.v_cesaro).norm();
    }
    x = std::move(ev.tx);
  }
  report.fix_iterations = n;
  report.iterations_used = n;

  if (!done) {
    report.fixed_point_residual = residual;
    const double late = (x - at_half).norm();
    const double early = (at_half - at_quarter).norm();
    const double steps = static_cast<double>(opts.max_iter - half);
    const bool drifting = quarter > 0 && late > 0.0 && late >= kDriftRatio * early &&
                          late >= kDriftCoherence * steps * residual;
    report.status = drifting ? SolveStatus::no_fixed_point_detected : SolveStatus::max_iter;
  } else if (report.status != SolveStatus::converged) {
    report.fixed_point_residual = residual;
  }
  return report;
}

SolveReport solve_normal(const OperatorPair& pair, const SolverOptions& opts) {
  const Vector x0 = start_point(pair, opts);
  DisplacementEstimate est = estimate_v(pair, x0, opts);
  SolveReport report = solve_perturbed(pair, est.v, opts);
  report.v_estimate = est.v;
  report.v_cesaro = est.v_cesaro;
  report.v_residual = est.v_residual;
  report.v_iterations = est.iterations;
  report.iterations_used = est.iterations + report.fix_iterations;
  report.v_trace = std::move(est.trace);
  return report;
}

bool SymmetryCheck::agrees(double tol) const { return std::abs(norm_ab - norm_ba) <= tol; }

SymmetryCheck norm_symmetry_check(const OperatorPair& pair, const SolverOptions& opts) {
  const Vector x0 = start_point(pair, opts);
  SolverOptions quiet = opts;
  quiet.trace_stride = 0;
  SymmetryCheck out;
  out.v_ab = estimate_v(pair, x0, quiet).v;
  out.v_ba = estimate_v(pair.swapped(), x0, quiet).v;
  out.norm_ab = out.v_ab.norm();
  out.norm_ba = out.v_ba.norm();
  return out;
}

Vector range_witness(const OperatorPair& pair, const Vector& z, double tol) {
  require_pair_dim(pair, z, "range_witness");
  if (!membership(pair.b(), z, Vector::Zero(z.size()), tol)) {
    throw PreconditionViolation("range_witness: 0 ∉ Bz at the supplied point");
  }
  return z - resolvent(pair.a(), z);
}

}  // namespace normsplit
