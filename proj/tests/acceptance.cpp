// Runs every acceptance criterion once and prints one line per criterion.

#include "kronspan/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace kronspan;

int main(int argc, char **argv) {
  SuiteOptions options;
  if (argc > 1)
    options.seed = std::strtoull(argv[1], nullptr, 10);
  using Criterion = CheckRecord (*)(const SuiteOptions &);
  const Criterion criteria[] = {criterion_kronecker_bases,  criterion_consecutive_cycles,
                                criterion_counterexample,         criterion_vertices_and_greedy,
                                criterion_vertex_count,    criterion_schur_weyl,
                                criterion_hecke,           criterion_restricted_bases};
  int failed = 0, index = 0;
  for (auto criterion : criteria) {
    ++index;
    const auto rec = criterion(options);
    const char *status = rec.passed ? "PASS" : rec.incomplete ? "INCOMPLETE" : "FAIL";
    std::printf("%-10s criterion %-28s %8.2fs  expected %s\n", status, rec.name.c_str(),
                rec.seconds, rec.expected.dump().c_str());
    if (rec.actual.is_object() && rec.actual.contains("note"))
      std::printf("           note: %s\n", rec.actual["note"].get<std::string>().c_str());
    std::fflush(stdout);
    failed += !rec.passed;
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
