#pragma once

#include <stdexcept>
#include <string>

namespace mmcore {

// Shape/flag problems: wrong dimensions, invalid configs, bad CLI combos.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing/corrupt files, unsatisfiable dataset constraints.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf or other numeric breakdown.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Stable process exit codes used by the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitData = 3,
  kExitNumeric = 4,
};

}  // namespace mmcore
