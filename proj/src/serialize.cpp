#include "normsplit/serialize.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>

namespace normsplit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + message);
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) fail(path + "/" + item.key(), "unknown field");
  }
}

const json& field(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path + "/" + key, "missing field");
  return *it;
}

double number_from_json(const json& j, const std::string& path) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

json number_to_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Matrix matrix_from_rows(const json& j, const std::string& path, Eigen::Index expected_cols = -1) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Eigen::Index cols = expected_cols;
  if (rows > 0) cols = static_cast<Eigen::Index>(j.front().is_array() ? j.front().size() : 0);
  Matrix m(rows, std::max<Eigen::Index>(cols, 0));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::string row_path = path + "/" + std::to_string(r);
    const Vector row = vector_from_json(j[static_cast<std::size_t>(r)], row_path);
    if (row.size() != cols) fail(row_path, "ragged matrix row");
    m.row(r) = row.transpose();
  }
  return m;
}

json matrix_to_rows(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r).transpose()));
  return rows;
}

std::string tag_of(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a tagged object");
  const json& tag = field(j, path, "tag");
  if (!tag.is_string()) fail(path + "/tag", "tag must be a string");
  return tag.get<std::string>();
}

template <class F>
auto guarded(const std::string& path, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

json optional_vector(const std::optional<Vector>& v) {
  return v ? vector_to_json(*v) : json(nullptr);
}

std::optional<Vector> optional_vector_from(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return vector_from_json(*it, path + "/" + key);
}

bool same(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] == y[i]) && !(std::isnan(x[i]) && std::isnan(y[i]))) return false;
  }
  return true;
}

bool same(const std::optional<Vector>& x, const std::optional<Vector>& y) {
  if (x.has_value() != y.has_value()) return false;
  return !x || same(*x, *y);
}

bool same(double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); }

}  // namespace

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number_to_json(v[i]));
  return out;
}

Vector vector_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = number_from_json(j[i], path + "/" + std::to_string(i));
  }
  return v;
}

json set_to_json(const ProjectableSet& set) {
  return std::visit(
      overloaded{
          [](const Box& s) -> json {
            return {{"tag", "Box"}, {"lo", vector_to_json(s.lo)}, {"hi", vector_to_json(s.hi)}};
          },
          [](const Ball& s) -> json {
            return {{"tag", "Ball"}, {"center", vector_to_json(s.center)}, {"radius", s.radius}};
          },
          [](const AffineSubspace& s) -> json {
            return {{"tag", "AffineSubspace"},
                    {"anchor", vector_to_json(s.anchor)},
                    {"basis", matrix_to_rows(s.basis.transpose())}};
          },
          [](const Halfspace& s) -> json {
            return {{"tag", "Halfspace"}, {"normal", vector_to_json(s.normal)}, {"offset", s.offset}};
          },
          [](const EpigraphExp& s) -> json { return {{"tag", "EpigraphExp"}, {"beta", s.beta}}; },
      },
      set.variant());
}

ProjectableSet set_from_json(const json& j, const std::string& path) {
  const std::string tag = tag_of(j, path);
  auto vec = [&](const char* key) { return vector_from_json(field(j, path, key), path + "/" + key); };
  auto num = [&](const char* key) { return number_from_json(field(j, path, key), path + "/" + key); };
  return guarded(path, [&]() -> ProjectableSet {
    if (tag == "Box") {
      check_keys(j, path, {"tag", "lo", "hi"});
      return ProjectableSet::box(vec("lo"), vec("hi"));
    }
    if (tag == "Ball") {
      check_keys(j, path, {"tag", "center", "radius"});
      return ProjectableSet::ball(vec("center"), num("radius"));
    }
    if (tag == "AffineSubspace") {
      check_keys(j, path, {"tag", "anchor", "basis"});
      Vector anchor = vec("anchor");
      Matrix directions = matrix_from_rows(field(j, path, "basis"), path + "/basis", anchor.size());
      return ProjectableSet::affine_subspace(std::move(anchor), directions.transpose());
    }
    if (tag == "Halfspace") {
      check_keys(j, path, {"tag", "normal", "offset"});
      return ProjectableSet::halfspace(vec("normal"), num("offset"));
    }
    if (tag == "EpigraphExp") {
      check_keys(j, path, {"tag", "beta"});
      return ProjectableSet::epigraph_exp(num("beta"));
    }
    fail(path + "/tag", "unknown set tag '" + tag + "'");
  });
}

json operator_to_json(const OperatorSpec& op) {
  return std::visit(
      overloaded{
          [](const NormalConeOp& n) -> json {
            return {{"tag", "NormalCone"}, {"set", set_to_json(n.set)}};
          },
          [](const AffineMonotoneOp& n) -> json {
            return {{"tag", "AffineMonotone"}, {"M", matrix_to_rows(n.m)}, {"a", vector_to_json(n.a)}};
          },
          [](const ConstantValuedOp& n) -> json {
            return {{"tag", "ConstantValued"}, {"a", vector_to_json(n.a)}};
          },
          [](const ZeroOp&) -> json { return {{"tag", "Zero"}}; },
          [](const InverseOp& n) -> json {
            return {{"tag", "Inverse"}, {"inner", operator_to_json(n.inner)}};
          },
          [](const FlipBothOp& n) -> json {
            return {{"tag", "FlipBoth"}, {"inner", operator_to_json(n.inner)}};
          },
          [](const InnerShiftOp& n) -> json {
            return {{"tag", "InnerShift"}, {"inner", operator_to_json(n.inner)}, {"w", vector_to_json(n.w)}};
          },
          [](const OuterShiftOp& n) -> json {
            return {{"tag", "OuterShift"}, {"inner", operator_to_json(n.inner)}, {"w", vector_to_json(n.w)}};
          },
      },
      op.node().v);
}

OperatorSpec operator_from_json(const json& j, const std::string& path) {
  const std::string tag = tag_of(j, path);
  auto vec = [&](const char* key) { return vector_from_json(field(j, path, key), path + "/" + key); };
  auto inner = [&] { return operator_from_json(field(j, path, "inner"), path + "/inner"); };
  return guarded(path, [&]() -> OperatorSpec {
    if (tag == "NormalCone") {
      check_keys(j, path, {"tag", "set"});
      return OperatorSpec::normal_cone(set_from_json(field(j, path, "set"), path + "/set"));
    }
    if (tag == "AffineMonotone") {
      check_keys(j, path, {"tag", "M", "a"});
      return OperatorSpec::affine_monotone(matrix_from_rows(field(j, path, "M"), path + "/M"),
                                           vec("a"));
    }
    if (tag == "ConstantValued") {
      check_keys(j, path, {"tag", "a"});
      return OperatorSpec::constant_valued(vec("a"));
    }
    if (tag == "Zero") {
      check_keys(j, path, {"tag"});
      return OperatorSpec::zero();
    }
    if (tag == "Inverse") {
      check_keys(j, path, {"tag", "inner"});
      return OperatorSpec::inverse(inner());
    }
    if (tag == "FlipBoth") {
      check_keys(j, path, {"tag", "inner"});
      return OperatorSpec::flip_both(inner());
    }
    if (tag == "InnerShift") {
      check_keys(j, path, {"tag", "inner", "w"});
      return OperatorSpec::inner_shift(inner(), vec("w"));
    }
    if (tag == "OuterShift") {
      check_keys(j, path, {"tag", "inner", "w"});
      return OperatorSpec::outer_shift(inner(), vec("w"));
    }
    fail(path + "/tag", "unknown operator tag '" + tag + "'");
  });
}

json problem_to_json(const ProblemFile& problem) {
  json j = {{"dim", problem.dim},
            {"A", operator_to_json(problem.a)},
            {"B", operator_to_json(problem.b)}};
  if (problem.w) j["w"] = vector_to_json(*problem.w);
  if (problem.max_iter) j["max_iter"] = *problem.max_iter;
  if (problem.tol_v) j["tol_v"] = *problem.tol_v;
  if (problem.tol_fix) j["tol_fix"] = *problem.tol_fix;
  if (problem.x0) j["x0"] = vector_to_json(*problem.x0);
  return j;
}

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  check_keys(j, "", {"dim", "A", "B", "w", "max_iter", "tol_v", "tol_fix", "x0"});

  ProblemFile p;
  const json& dim = field(j, "", "dim");
  if (!dim.is_number_integer() || dim.get<long long>() <= 0) fail("/dim", "expected a positive integer");
  p.dim = dim.get<Eigen::Index>();
  p.a = operator_from_json(field(j, "", "A"), "/A");
  p.b = operator_from_json(field(j, "", "B"), "/B");
  p.w = optional_vector_from(j, "w", "");
  p.x0 = optional_vector_from(j, "x0", "");
  if (auto it = j.find("max_iter"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 1) fail("/max_iter", "expected a positive integer");
    p.max_iter = it->get<std::int64_t>();
  }
  if (auto it = j.find("tol_v"); it != j.end()) p.tol_v = number_from_json(*it, "/tol_v");
  if (auto it = j.find("tol_fix"); it != j.end()) p.tol_fix = number_from_json(*it, "/tol_fix");

  for (const auto* v : {&p.w, &p.x0}) {
    if (*v && (*v)->size() != p.dim) {
      fail(v == &p.w ? "/w" : "/x0", "dimension does not match dim");
    }
  }
  guarded("", [&] { return p.pair(); });
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open problem file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

bool operator==(const ScenarioMetadata& x, const ScenarioMetadata& y) {
  return x.name == y.name && same(x.expected_v, y.expected_v) &&
         same(x.expected_v_reverse, y.expected_v_reverse) &&
         same(x.expected_normal_solution, y.expected_normal_solution) &&
         x.expected_solution_exists == y.expected_solution_exists && x.provenance == y.provenance;
}

bool operator==(const ReportFile& x, const ReportFile& y) {
  const SolveReport& a = x.report;
  const SolveReport& b = y.report;
  const Certificates& ca = a.certificates;
  const Certificates& cb = b.certificates;
  return a.status == b.status && same(a.w, b.w) && same(a.v_estimate, b.v_estimate) &&
         same(a.v_cesaro, b.v_cesaro) && same(a.v_residual, b.v_residual) &&
         same(a.normal_solution, b.normal_solution) && same(a.governing_point, b.governing_point) &&
         same(a.dual_solution, b.dual_solution) && ca.checked == cb.checked &&
         ca.b_side == cb.b_side && ca.a_side == cb.a_side && same(ca.b_residual, cb.b_residual) &&
         same(ca.a_residual, cb.a_residual) &&
         same(a.fixed_point_residual, b.fixed_point_residual) &&
         a.v_iterations == b.v_iterations && a.fix_iterations == b.fix_iterations &&
         a.iterations_used == b.iterations_used && x.scenario == y.scenario;
}

json report_to_json(const ReportFile& file) {
  const SolveReport& r = file.report;
  json j = {
      {"status", to_string(r.status)},
      {"w", vector_to_json(r.w)},
      {"v_estimate", vector_to_json(r.v_estimate)},
      {"v_cesaro", vector_to_json(r.v_cesaro)},
      {"v_residual", number_to_json(r.v_residual)},
      {"normal_solution", optional_vector(r.normal_solution)},
      {"governing_point", optional_vector(r.governing_point)},
      {"dual_solution", optional_vector(r.dual_solution)},
      {"certificates",
       {{"checked", r.certificates.checked},
        {"b_side", r.certificates.b_side},
        {"a_side", r.certificates.a_side},
        {"b_residual", number_to_json(r.certificates.b_residual)},
        {"a_residual", number_to_json(r.certificates.a_residual)}}},
      {"fixed_point_residual", number_to_json(r.fixed_point_residual)},
      {"v_iterations", r.v_iterations},
      {"fix_iterations", r.fix_iterations},
      {"iterations_used", r.iterations_used},
  };
  if (file.scenario) {
    const ScenarioMetadata& s = *file.scenario;
    j["scenario"] = {{"name", s.name},
                     {"expected_v", optional_vector(s.expected_v)},
                     {"expected_v_reverse", optional_vector(s.expected_v_reverse)},
                     {"expected_normal_solution", optional_vector(s.expected_normal_solution)},
                     {"expected_solution_exists", s.expected_solution_exists},
                     {"provenance", s.provenance}};
  }
  return j;
}

ReportFile report_from_json(const json& j) {
  check_keys(j, "", {"status", "w", "v_estimate", "v_cesaro", "v_residual", "normal_solution",
                     "governing_point", "dual_solution", "certificates", "fixed_point_residual",
                     "v_iterations", "fix_iterations", "iterations_used", "scenario"});
  auto vec = [&](const char* key) { return vector_from_json(field(j, "", key), std::string("/") + key); };
  auto num = [&](const json& obj, const std::string& base, const char* key) {
    return number_from_json(field(obj, base, key), base + "/" + key);
  };
  auto count = [&](const char* key) {
    const json& v = field(j, "", key);
    if (!v.is_number_integer()) fail(std::string("/") + key, "expected an integer");
    return v.get<std::int64_t>();
  };
  auto flag = [&](const json& obj, const std::string& base, const char* key) {
    const json& v = field(obj, base, key);
    if (!v.is_boolean()) fail(base + "/" + key, "expected a boolean");
    return v.get<bool>();
  };

  ReportFile file;
  SolveReport& r = file.report;
  const json& status = field(j, "", "status");
  if (!status.is_string()) fail("/status", "expected a string");
  r.status = guarded("/status", [&] { return status_from_string(status.get<std::string>()); });
  r.w = vec("w");
  r.v_estimate = vec("v_estimate");
  r.v_cesaro = vec("v_cesaro");
  r.v_residual = num(j, "", "v_residual");
  r.normal_solution = optional_vector_from(j, "normal_solution", "");
  r.governing_point = optional_vector_from(j, "governing_point", "");
  r.dual_solution = optional_vector_from(j, "dual_solution", "");
  const json& cert = field(j, "", "certificates");
  check_keys(cert, "/certificates", {"checked", "b_side", "a_side", "b_residual", "a_residual"});
  r.certificates.checked = flag(cert, "/certificates", "checked");
  r.certificates.b_side = flag(cert, "/certificates", "b_side");
  r.certificates.a_side = flag(cert, "/certificates", "a_side");
  r.certificates.b_residual = num(cert, "/certificates", "b_residual");
  r.certificates.a_residual = num(cert, "/certificates", "a_residual");
  r.fixed_point_residual = num(j, "", "fixed_point_residual");
  r.v_iterations = count("v_iterations");
  r.fix_iterations = count("fix_iterations");
  r.iterations_used = count("iterations_used");

  if (auto it = j.find("scenario"); it != j.end() && !it->is_null()) {
    const json& s = *it;
    check_keys(s, "/scenario", {"name", "expected_v", "expected_v_reverse",
                                "expected_normal_solution", "expected_solution_exists", "provenance"});
    ScenarioMetadata meta;
    const json& name = field(s, "/scenario", "name");
    const json& prov = field(s, "/scenario", "provenance");
    if (!name.is_string() || !prov.is_string()) fail("/scenario", "name and provenance must be strings");
    meta.name = name.get<std::string>();
    meta.provenance = prov.get<std::string>();
    meta.expected_v = optional_vector_from(s, "expected_v", "/scenario");
    meta.expected_v_reverse = optional_vector_from(s, "expected_v_reverse", "/scenario");
    meta.expected_normal_solution = optional_vector_from(s, "expected_normal_solution", "/scenario");
    meta.expected_solution_exists = flag(s, "/scenario", "expected_solution_exists");
    file.scenario = std::move(meta);
  }
  return file;
}

}  // namespace normsplit
