#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbound/report.hpp"

namespace pbound::cli {

enum ExitCode : int {
  kOk = 0,
  kInvariantFailure = 1,
  kParseError = 2,
  kUsageError = 3,
  kStructuralError = 4,
};

enum class Format { Json, Tsv };

struct RunConfig {
  std::string command;
  std::optional<std::string> input_path;
  std::string perturbation;
  std::optional<std::uint64_t> seed;
  Format format = Format::Json;
};

// {"lambda_I", "lambda_F_exact", "bound", "asymptotic_estimate",
//  "equality_case", "slack"}; numbers rounded to 12 significant digits.
nlohmann::json report_to_json(const BoundReport& report);

// Rounds to 12 significant digits.
double round12(double value);

// Entry point shared by the executable and the tests. args excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbound::cli
