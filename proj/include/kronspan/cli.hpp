#pragma once

#include "kronspan/errors.hpp"
#include "kronspan/report.hpp"
#include "kronspan/tensor.hpp"

#include <cstdint>
#include <string>

namespace kronspan {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_incomplete = 3;

struct RunConfig {
  std::string subcommand;
  int n = 4;
  int r = 2;
  Direction direction = Direction::increasing;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  Budget budget{};
  std::string out;   // report path; empty or "-" for stdout
  Format format = Format::json;
  std::string input; // matrix file for omega / decompose
  std::string matrix_out;
  std::string vertex_dir;
  std::string data_dir;
  bool timing = true;
};

/// Executes one subcommand. Budget overruns surface as incomplete checks.
Report execute(const RunConfig &config);

/// Parses argv (flags, KRONSPAN_* environment overrides), runs, writes the
/// report and returns the process exit status.
int run_cli(int argc, const char *const *argv);

} // namespace kronspan
