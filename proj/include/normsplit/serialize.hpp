#pragma once

// JSON forms of operator expression trees, problem files and solve reports.
//
// Operators and sets are tagged records whose keys mirror the C++ types:
//   {"tag": "NormalCone", "set": {"tag": "Ball", "center": [0, 0], "radius": 1}}
//   {"tag": "AffineMonotone", "M": [[0, -1], [1, 0]], "a": [1, 0]}
//   {"tag": "InnerShift", "inner": {...}, "w": [0, 1]}
// Matrices are arrays of rows. AffineSubspace.basis is an array of direction
// vectors. Unknown tags and unknown keys are rejected with the JSON pointer of
// the offending field.

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "normsplit/splitting.hpp"

namespace normsplit {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json vector_to_json(const Vector& v);
Vector vector_from_json(const json& j, const std::string& path);

json set_to_json(const ProjectableSet& set);
ProjectableSet set_from_json(const json& j, const std::string& path = "");

json operator_to_json(const OperatorSpec& op);
OperatorSpec operator_from_json(const json& j, const std::string& path = "");

struct ProblemFile {
  Eigen::Index dim = 0;
  OperatorSpec a = OperatorSpec::zero();
  OperatorSpec b = OperatorSpec::zero();
  std::optional<Vector> w;
  std::optional<std::int64_t> max_iter;
  std::optional<double> tol_v;
  std::optional<double> tol_fix;
  std::optional<Vector> x0;

  OperatorPair pair() const { return {a, b, dim}; }
};

json problem_to_json(const ProblemFile& problem);
/// Throws ParseError; syntax errors carry line and column.
ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);

struct ScenarioMetadata {
  std::string name;
  std::optional<Vector> expected_v;
  std::optional<Vector> expected_v_reverse;
  std::optional<Vector> expected_normal_solution;
  bool expected_solution_exists = true;
  std::string provenance;
};

bool operator==(const ScenarioMetadata& x, const ScenarioMetadata& y);

/// A SolveReport without its traces, plus optional scenario context.
struct ReportFile {
  SolveReport report;
  std::optional<ScenarioMetadata> scenario;
};

bool operator==(const ReportFile& x, const ReportFile& y);

json report_to_json(const ReportFile& report);
ReportFile report_from_json(const json& j);

}  // namespace normsplit
