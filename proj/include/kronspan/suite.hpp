#pragma once

#include "kronspan/errors.hpp"
#include "kronspan/report.hpp"

#include <cstdint>
#include <string>

namespace kronspan {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  Budget budget{};
  /// Directory holding counterexample.mat; empty means the build-time default.
  std::string data_dir;
};

/// Directory of reference data: $KRONSPAN_DATA_DIR if set, else the
/// tests/data directory of the source tree.
std::string default_data_dir();

CheckRecord criterion_kronecker_bases(const SuiteOptions &options);
CheckRecord criterion_consecutive_cycles(const SuiteOptions &options);
CheckRecord criterion_counterexample(const SuiteOptions &options);
CheckRecord criterion_vertices_and_greedy(const SuiteOptions &options);
CheckRecord criterion_vertex_count(const SuiteOptions &options);
CheckRecord criterion_schur_weyl(const SuiteOptions &options);
CheckRecord criterion_hecke(const SuiteOptions &options);
CheckRecord criterion_restricted_bases(const SuiteOptions &options);

/// All eight acceptance criteria in order.
Report run_suite(const SuiteOptions &options);

} // namespace kronspan
