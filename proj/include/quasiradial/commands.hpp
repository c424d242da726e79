#pragma once

// Subcommands of the quasiradial tool. Each returns its JSON document and an
// exit code; the executable only parses arguments and prints.

#include "quasiradial/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace quasiradial {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalidConfig = 2,
  kExitHypothesis = 3,
  kExitNotConverged = 4,
  kExitCollapsed = 5,
};

struct CommandOptions {
  std::optional<std::filesystem::path> out_dir;
  bool force = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::ordered_json output;
};

CommandResult cmd_region(const RunConfig& config);
/// Writes alpha,q,member rows to csv; the result summarizes the raster.
CommandResult cmd_region_plot(const RunConfig& config, std::ostream& csv);
CommandResult cmd_check(const RunConfig& config);
CommandResult cmd_probe(const RunConfig& config, const CommandOptions& options);
CommandResult cmd_solve(const RunConfig& config, const CommandOptions& options);

/// ex1, ex2_I, ex2_II or ex2_III; d is the growth exponent of K in the
/// second family (default 10).
nlohmann::json example_config(const std::string& name, const Rational& d = Rational(10));
CommandResult cmd_example(const std::string& name, const CommandOptions& options,
                          const Rational& d = Rational(10));

/// Smallest d on lo, lo + step, ... <= hi with q** > q* for the data at
/// infinity of the second example family, if any.
std::optional<Rational> smallest_d_with_qss_above_qs(const ProblemDims<Rational>& dims, const Rational& lo,
                                                     const Rational& hi, const Rational& step);

/// Runs a command on error-checked input, mapping library errors to exit 2.
template <typename F>
CommandResult guarded(const std::string& command, F&& body);

nlohmann::ordered_json error_document(const std::string& command, const std::string& message);

template <typename F>
CommandResult guarded(const std::string& command, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {kExitInvalidConfig, error_document(command, e.what())};
  } catch (const nlohmann::json::exception& e) {
    return {kExitInvalidConfig, error_document(command, e.what())};
  }
}

}  // namespace quasiradial
