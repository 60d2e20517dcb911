#include "normsplit/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "normsplit/duality.hpp"
#include "normsplit/scenarios.hpp"
#include "normsplit/serialize.hpp"

namespace normsplit::cli {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string fmt(const Vector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += fmt(v[i]);
  }
  return s + ")";
}

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::converged:
      return kExitConverged;
    case SolveStatus::no_fixed_point_detected:
      return kExitNoFixedPoint;
    case SolveStatus::max_iter:
      return kExitMaxIter;
  }
  return kExitInputError;
}

SolverOptions options_for(const CommandFlags& flags, const ProblemFile* problem) {
  SolverOptions opts;
  if (problem) {
    if (problem->max_iter) opts.max_iter = *problem->max_iter;
    if (problem->tol_v) opts.tol_v = *problem->tol_v;
    if (problem->tol_fix) opts.tol_fix = *problem->tol_fix;
    if (problem->x0) opts.x0 = problem->x0;
  }
  if (flags.max_iter) opts.max_iter = *flags.max_iter;
  if (flags.tol_v) opts.tol_v = *flags.tol_v;
  if (flags.tol_fix) opts.tol_fix = *flags.tol_fix;
  if (flags.x0) opts.x0 = flags.x0;
  if (flags.trace_path) opts.trace_stride = 1;
  return opts;
}

std::string phase_two_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + ".fix";
  }
  return path.substr(0, dot) + ".fix" + path.substr(dot);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void write_traces(const SolveReport& report, const std::string& path, bool two_phase) {
  auto csv = [](const IterationTrace& trace) {
    std::ostringstream s;
    write_trace_csv(trace, s);
    return s.str();
  };
  if (two_phase) {
    write_file(path, csv(report.v_trace));
    write_file(phase_two_path(path), csv(report.fix_trace));
  } else {
    write_file(path, csv(report.fix_trace));
  }
}

void emit_report(const ReportFile& file, const CommandFlags& flags, std::ostream& out) {
  const std::string text = report_to_json(file).dump(2) + "\n";
  if (flags.json_path) {
    write_file(*flags.json_path, text);
  } else {
    out << text;
  }
}

void print_summary(const SolveReport& r, std::ostream& out) {
  out << "status:           " << to_string(r.status) << "\n"
      << "v estimate:       " << fmt(r.v_estimate) << "  (|v| = " << fmt(r.v_estimate.norm())
      << ", estimator gap " << fmt(r.v_residual) << ")\n"
      << "perturbation w:   " << fmt(r.w) << "\n";
  if (r.normal_solution) {
    out << "normal solution:  " << fmt(*r.normal_solution) << "\n"
        << "dual solution:    " << fmt(*r.dual_solution) << "\n"
        << "certificates:     B " << fmt(r.certificates.b_residual) << ", A "
        << fmt(r.certificates.a_residual) << "\n";
  }
  out << "fixed-point res.: " << fmt(r.fixed_point_residual) << "\n"
      << "iterations:       " << r.v_iterations << " + " << r.fix_iterations << "\n";
}

struct CheckRow {
  std::string quantity;
  std::string estimate;
  std::string expected;
  double error;
  double tolerance;
  bool pass() const { return error <= tolerance; }
};

}  // namespace

Vector parse_vector_flag(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) throw std::invalid_argument("empty vector");
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

int cmd_solve(const std::string& path, const CommandFlags& flags, std::ostream& out,
              std::ostream& err) {
  try {
    const ProblemFile problem = load_problem(path);
    const OperatorPair pair = problem.pair();
    const SolverOptions opts = options_for(flags, &problem);
    const std::optional<Vector> w = flags.w ? flags.w : problem.w;
    if (w && w->size() != pair.dim()) throw DimensionMismatch("--w: dimension does not match dim");

    const SolveReport report = w ? solve_perturbed(pair, *w, opts) : solve_normal(pair, opts);
    if (flags.trace_path) write_traces(report, *flags.trace_path, !w);
    emit_report(ReportFile{report, std::nullopt}, flags, out);
    if (flags.json_path) print_summary(report, out);
    return exit_code(report.status);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_scenario(const std::string& name, const CommandFlags& flags, std::ostream& out,
                 std::ostream& err) {
  try {
    Scenario s = make_scenario(name);
    const OracleResult oracle = s.oracle();
    const SolverOptions opts = options_for(flags, nullptr);
    const SolveReport report = solve_normal(s.pair, opts);
    if (flags.trace_path) write_traces(report, *flags.trace_path, true);

    std::vector<CheckRow> rows;
    if (oracle.v) {
      rows.push_back({"v(A,B)", fmt(report.v_estimate), fmt(*oracle.v),
                      (report.v_estimate - *oracle.v).norm(), s.tolerance});
    }
    if (oracle.v_reverse) {
      const Vector x0 = opts.x0 ? *opts.x0 : Vector::Zero(s.pair.dim());
      SolverOptions quiet = opts;
      quiet.trace_stride = 0;
      const Vector v_ba = estimate_v(s.pair.swapped(), x0, quiet).v;
      rows.push_back({"v(B,A)", fmt(v_ba), fmt(*oracle.v_reverse),
                      (v_ba - *oracle.v_reverse).norm(), s.tolerance});
      rows.push_back({"|v(A,B)|-|v(B,A)|", fmt(report.v_estimate.norm() - v_ba.norm()), "0",
                      std::abs(report.v_estimate.norm() - v_ba.norm()), s.tolerance});
    }
    const SolveStatus expected =
        oracle.solution_exists ? SolveStatus::converged : SolveStatus::no_fixed_point_detected;
    rows.push_back({"status", to_string(report.status), to_string(expected),
                    report.status == expected ? 0.0 : 1.0, 0.0});
    if (report.normal_solution && s.solution_error) {
      rows.push_back({"normal solution", fmt(*report.normal_solution),
                      oracle.normal_solution ? fmt(*oracle.normal_solution) : "-",
                      s.solution_error(*report.normal_solution), std::max(s.tolerance, 1e-6)});
    }

    out << "scenario " << s.name << ": " << s.description << "\n"
        << "oracle: " << oracle.provenance << "\n";
    out << std::left << std::setw(20) << "quantity" << std::setw(34) << "estimate" << std::setw(34)
        << "oracle" << std::setw(14) << "error" << std::setw(10) << "tol"
        << "result\n";
    bool all = true;
    for (const auto& row : rows) {
      all = all && row.pass();
      out << std::setw(20) << row.quantity << std::setw(34) << row.estimate + " " << std::setw(34)
          << row.expected + " " << std::setw(14) << fmt(row.error) + " " << std::setw(10) << fmt(row.tolerance) + " "
          << (row.pass() ? "PASS" : "FAIL") << "\n";
    }
    out << (all ? "PASS" : "FAIL") << " " << s.name << "\n";

    if (flags.json_path) {
      ScenarioMetadata meta{s.name, oracle.v, oracle.v_reverse, oracle.normal_solution,
                            oracle.solution_exists, oracle.provenance};
      write_file(*flags.json_path, report_to_json(ReportFile{report, meta}).dump(2) + "\n");
    }
    return all ? kExitConverged : kExitCheckFailed;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "; known scenarios:";
    for (const auto& n : scenario_names()) err << " " << n;
    err << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_duality_check(const std::string& path, const CommandFlags& flags, std::ostream& out,
                      std::ostream& err) {
  try {
    const ProblemFile problem = load_problem(path);
    const OperatorPair pair = problem.pair();
    const OperatorPair dual = dual_pair(pair);
    const SolverOptions opts = options_for(flags, &problem);

    std::mt19937_64 rng(flags.seed);
    std::normal_distribution<double> gauss(0.0, 5.0);
    double t_dev = 0.0;
    for (int i = 0; i < flags.samples; ++i) {
      Vector x(pair.dim());
      for (Eigen::Index j = 0; j < x.size(); ++j) x[j] = gauss(rng);
      t_dev = std::max(t_dev, (dr_apply(pair, x) - dr_apply(dual, x)).norm());
    }
    out << "T vs dual T, " << flags.samples << " samples (seed " << flags.seed
        << "): max deviation " << fmt(t_dev) << "\n";
    bool ok = t_dev <= kDualityTolerance;

    const std::optional<Vector> w = flags.w ? flags.w : problem.w;
    const SolveReport report = w ? solve_perturbed(pair, *w, opts) : solve_normal(pair, opts);
    if (report.status == SolveStatus::converged) {
      const Vector fixed = *report.governing_point + report.w;
      double psi_dev = 0.0;
      double inv_dev = 0.0;
      try {
        const PrimalDualPair zk = psi_inv(pair, fixed, report.w, opts.tol_fix);
        psi_dev = (psi(zk) - fixed).norm();
        const PrimalDualPair back = psi_inv(pair, psi(zk), report.w, opts.tol_fix);
        inv_dev = std::max((back.z - zk.z).norm(), (back.k - zk.k).norm());
      } catch (const std::exception& e) {
        out << "psi_inv failed: " << e.what() << "\n";
        psi_dev = inv_dev = std::numeric_limits<double>::infinity();
      }
      out << "psi(psi_inv(x)) vs x: max deviation " << fmt(psi_dev) << "\n"
          << "psi_inv(psi(z,k)) vs (z,k): max deviation " << fmt(inv_dev) << "\n";
      ok = ok && psi_dev <= kDualityTolerance && inv_dev <= kDualityTolerance;
    } else {
      out << "psi roundtrip skipped: solve status " << to_string(report.status) << "\n";
    }
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitConverged : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace normsplit::cli
