#pragma once

// Batch front end: every verification as a reproducible job that writes a
// JSON, CSV or markdown report.  Exit codes: 0 pass, 1 check failure, 2 usage.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wrt {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
  std::string command;
  int p = 0;  ///< 0 when not given
  int p_min = 3;
  int p_max = 20;
  std::string matrix;  ///< "a,b;c,d"
  std::string weight = "0";
  std::string basis = "colored";
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  std::string height = "1000";
  std::size_t word_length = 48;
  std::uint64_t order_cap = 10000;
  std::uint64_t closure_cap = 1000000;
  std::string format = "json";
  std::string output;  ///< empty: write to the given stream
};

const std::vector<std::string>& commands();

/// Runs one command.  Diagnostics go to err, the report to out (or to
/// config.output when set).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace wrt
