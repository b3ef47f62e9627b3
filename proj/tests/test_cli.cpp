#include "doctest.h"

#include "kronspan/cli.hpp"
#include "kronspan/errors.hpp"
#include "kronspan/report.hpp"
#include "kronspan/sparse.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace kronspan;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

/// Runs the installed binary with a shell-quoted argument string.
Run run_binary(const std::string &args, const std::string &env = "") {
  const fs::path tmp = fs::temp_directory_path() / ("kronspan_cli_" + std::to_string(::getpid()));
  const std::string cmd = env + " '" + std::string(KRONSPAN_CLI_PATH) + "' " + args + " > '" +
                          tmp.string() + "' 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream s;
  s << in.rdbuf();
  fs::remove(tmp);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, s.str()};
}

Json parse_out(const Run &r) { return Json::parse(r.out); }

RunConfig config(const std::string &sub, int n, int r) {
  RunConfig c;
  c.subcommand = sub;
  c.n = n;
  c.r = r;
  c.timing = false;
  return c;
}

} // namespace

TEST_CASE("empty report renders a versioned empty check list") {
  Report empty;
  CHECK(render_report(empty, Format::json, false) ==
        "{\n  \"version\": 1,\n  \"checks\": []\n}\n");
  CHECK(render_report(empty, Format::json, true) == render_report(empty, Format::json, false));
  CHECK(empty.exit_status() == 0);
}

TEST_CASE("exit status follows the checks") {
  Report report;
  report.checks.push_back(run_check("ok", {}, [](CheckRecord &c) { c.passed = true; }));
  CHECK(report.exit_status() == 0);
  report.checks.push_back(run_check("bad", {{"x", 1}}, [](CheckRecord &c) {
    c.actual = 2;
    c.passed = false;
  }));
  CHECK(report.exit_status() == 1);
  const auto j = Json::parse(render_report(report, Format::json, false));
  CHECK(j["checks"][1]["name"] == "bad");
  CHECK(j["checks"][1]["passed"] == false);
  CHECK(j["checks"][1]["actual"] == 2);

  Report budget;
  budget.checks.push_back(run_check("big", {}, [](CheckRecord &) {
    throw BudgetExceeded("too large");
  }));
  CHECK(budget.checks[0].incomplete);
  CHECK(budget.exit_status() == 3);
  budget.checks.push_back(run_check("bad", {}, [](CheckRecord &) {
    throw std::runtime_error("boom");
  }));
  CHECK(!budget.checks[1].passed);
  CHECK(budget.exit_status() == 1);
}

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
  Report report;
  report.checks.push_back(run_check("a,b", {}, [](CheckRecord &c) { c.passed = true; }));
  const auto csv = render_report(report, Format::csv, false);
  CHECK(csv.rfind("name,status,expected,actual,inputs\n", 0) == 0);
  CHECK(csv.find("\"a,b\"") != std::string::npos);
  CHECK(render_report(report, Format::csv, true).find(",seconds") != std::string::npos);
}

TEST_CASE("emit_report reports the failing path") {
  Report report;
  try {
    emit_report(report, Format::json, "/nonexistent-dir/x/report.json");
    FAIL("expected an exception");
  } catch (const std::runtime_error &e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/x/report.json") != std::string::npos);
  }
}

TEST_CASE("identical configurations give identical bytes") {
  for (const char *sub : {"basis", "rank", "grid", "omega", "decompose", "counterexample"}) {
    const auto c = config(sub, 4, 2);
    REQUIRE(render_report(execute(c), Format::json, false) ==
            render_report(execute(c), Format::json, false));
  }
}

TEST_CASE("subcommand results") {
  {
    const auto rep = execute(config("basis", 4, 2));
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].passed);
    CHECK(rep.checks[0].actual["words"].size() == 23);
  }
  {
    auto c = config("basis", 4, 1);
    c.direction = Direction::decreasing;
    CHECK(execute(c).checks[0].actual["size"] == 10);
  }
  {
    const auto rep = execute(config("counterexample", 4, 2));
    CHECK(rep.checks[0].passed);
    CHECK(rep.checks[0].actual["summary"] ==
          "doubly stochastic: yes; in im(Φ): yes; positive diagonal: none; conv hull: "
          "infeasible");
  }
  {
    const auto rep = execute(config("grid", 4, 0));
    CHECK(rep.checks[0].passed);
    CHECK(rep.checks[0].actual["distinct"] == 10);
  }
  {
    const auto rep = execute(config("schurweyl", 3, 2));
    CHECK(rep.checks[0].passed);
  }
  {
    const auto rep = execute(config("hecke-verify", 3, 1));
    CHECK(!rep.any_failed());
    CHECK(rep.checks.size() == 7);
  }
  {
    const auto rep = execute(config("hecke-verify", 6, 1));
    CHECK(rep.exit_status() == 3);
  }
  {
    const auto rep = execute(config("omega", 4, 2));
    CHECK(!rep.any_failed());
    CHECK(rep.checks.back().actual.contains("farkas"));
  }
  {
    const auto rep = execute(config("decompose", 4, 2));
    CHECK(rep.exit_status() == 1);
  }
  CHECK_THROWS_AS(execute(config("nope", 4, 2)), std::invalid_argument);
}

TEST_CASE("vertex files and index") {
  const fs::path dir = fs::temp_directory_path() / "kronspan_vertices_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto c = config("vertices", 3, 1);
  c.vertex_dir = dir.string();
  const auto rep = execute(c);
  REQUIRE(rep.checks[0].passed);
  std::ifstream in(dir / "index.json");
  const auto index = Json::parse(in);
  CHECK(index["count"] == 6);
  CHECK(index["vertices"].size() == 6);
  for (const auto &v : index["vertices"]) {
    std::ifstream m(dir / v["file"].get<std::string>());
    REQUIRE(m);
    const auto mat = read_matrix(m);
    CHECK(mat.rows() == 3);
    CHECK(!v["gamma"].is_null());
  }
  fs::remove_all(dir);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("rank --n 4 --r 2 --no-timing").status == 0);
  CHECK(run_binary("--bogus").status == 2);
  CHECK(run_binary("rank --n 0").status == 2);
  CHECK(run_binary("rank --format xml").status == 2);
  CHECK(run_binary("").status == 2);
  CHECK(run_binary("decompose --no-timing").status == 1);
  CHECK(run_binary("rank --n 6 --r 3 --no-timing").status == 3);
  CHECK(run_binary("rank --n 4 --r 2 --budget-cells 10 --no-timing").status == 3);
  CHECK(run_binary("--help").status == 0);
}

TEST_CASE("binary output and environment overrides") {
  const auto a = run_binary("rank --n 4 --r 2 --no-timing");
  const auto b = run_binary("rank --no-timing", "KRONSPAN_N=4 KRONSPAN_R=2");
  CHECK(a.out == b.out);
  CHECK(parse_out(a)["checks"][0]["actual"]["span_rank"] == 23);
  const auto text = run_binary("counterexample --format text --no-timing");
  CHECK(text.out.find("doubly stochastic: yes; in im(Φ): yes; positive diagonal: none; "
                      "conv hull: infeasible") != std::string::npos);
  const auto grid = run_binary("grid --n 4 --format text --no-timing");
  CHECK(grid.out.find("234[1]") != std::string::npos);
  const auto timed = parse_out(run_binary("rank --n 3 --r 1"));
  CHECK(timed.contains("timing"));
  CHECK(!parse_out(a).contains("timing"));

  const fs::path out = fs::temp_directory_path() / "kronspan_cli_report.json";
  const fs::path mat = fs::temp_directory_path() / "kronspan_cli_counterexample.mat";
  CHECK(run_binary("counterexample --no-timing --out '" + out.string() + "' --matrix-out '" +
                   mat.string() + "'")
            .status == 0);
  std::ifstream rin(out), min(mat);
  CHECK(Json::parse(rin)["command"] == "counterexample");
  CHECK(read_matrix(min).nonzeros() == 76);
  fs::remove(out);
  fs::remove(mat);
}
