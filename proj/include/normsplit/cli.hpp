#pragma once

// Command implementations behind the `normsplit` executable. Each returns the
// process exit code:
//   0 converged, 1 input error, 2 no_fixed_point_detected, 3 max_iter,
//   4 scenario or duality check outside tolerance.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "normsplit/vecspace.hpp"

namespace normsplit::cli {

inline constexpr int kExitConverged = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoFixedPoint = 2;
inline constexpr int kExitMaxIter = 3;
inline constexpr int kExitCheckFailed = 4;

inline constexpr std::uint64_t kDefaultSeed = 20130607;
inline constexpr double kDualityTolerance = 1e-8;

struct CommandFlags {
  std::optional<std::int64_t> max_iter;
  std::optional<double> tol_v;
  std::optional<double> tol_fix;
  std::optional<Vector> x0;
  std::optional<Vector> w;
  std::optional<std::string> trace_path;
  std::optional<std::string> json_path;
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;
};

/// Parses "v1,v2,..." into a vector. Throws std::invalid_argument.
Vector parse_vector_flag(const std::string& text);

int cmd_solve(const std::string& path, const CommandFlags& flags, std::ostream& out,
              std::ostream& err);
int cmd_scenario(const std::string& name, const CommandFlags& flags, std::ostream& out,
                 std::ostream& err);
int cmd_duality_check(const std::string& path, const CommandFlags& flags, std::ostream& out,
                      std::ostream& err);

}  // namespace normsplit::cli
