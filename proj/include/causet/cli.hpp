#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace causet::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Everything that determines a run's output. The thread count is not part
/// of it: results are identical for any team size.
struct RunConfig {
  std::string subcommand;
  int dimension = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> digits;
  std::string format = "json";
  std::string out;
  std::map<std::string, std::string> parameters;

  nlohmann::ordered_json to_json() const;
  static RunConfig from_json(const nlohmann::ordered_json& j);
};

/// Parses argv, runs one subcommand and writes results to `out` (or the
/// --out file); diagnostics go to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace causet::cli
