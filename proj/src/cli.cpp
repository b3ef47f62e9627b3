#include "kronspan/cli.hpp"
#include "kronspan/annihilator.hpp"
#include "kronspan/cycles.hpp"
#include "kronspan/diagram.hpp"
#include "kronspan/murphy.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/suite.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

namespace kronspan {

namespace {

Json words(const std::vector<Permutation> &perms) {
  Json out = Json::array();
  for (const auto &w : perms)
    out.push_back(w.to_string());
  return out;
}

Json nr(const RunConfig &c) { return {{"n", c.n}, {"r", c.r}}; }

SparseMatrix load_matrix(const RunConfig &c) {
  if (c.input.empty())
    return roberson_schmidt_matrix().matrix;
  std::ifstream in(c.input);
  if (!in)
    throw std::runtime_error("cannot read matrix file '" + c.input + "'");
  return read_matrix(in);
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out)
    throw std::runtime_error("failed writing '" + path + "'");
}

Json weights_json(const std::vector<std::pair<Permutation, Rational>> &weights) {
  Json out = Json::object();
  for (const auto &[w, c] : weights)
    out[w.to_string()] = to_fraction(c);
  return out;
}

void add_basis(Report &report, const RunConfig &c) {
  report.checks.push_back(run_check("basis",
                                    {{"n", c.n}, {"r", c.r},
                                     {"direction", c.direction == Direction::increasing
                                                       ? "increasing"
                                                       : "decreasing"}},
                                    [&](CheckRecord &rec) {
    auto b = theorem1_basis(c.n, c.r, c.direction, c.budget);
    std::ostringstream text;
    for (const auto &w : b.basis)
      text << "  " << w.to_string() << '\n';
    text << "  " << b.basis.size() << " permutations, rank " << b.basis_rank << ", span rank "
         << b.span_rank << '\n';
    rec.expected = {{"size", rsk_count(c.n, c.r)}};
    rec.actual = {{"size", b.basis.size()},
                  {"rank", b.basis_rank},
                  {"span_rank", b.span_rank},
                  {"words", words(b.basis)},
                  {"text", text.str()}};
    rec.passed = b.basis.size() == rsk_count(c.n, c.r);
  }));
}

void add_rank(Report &report, const RunConfig &c) {
  report.checks.push_back(run_check("span_rank", nr(c), [&](CheckRecord &rec) {
    const auto rank = span_rank(c.n, c.r, c.budget);
    const auto hook = rsk_count(c.n, c.r);
    rec.expected = {{"span_rank", hook}};
    rec.actual = {{"span_rank", rank}, {"kernel_dim", factorial(c.n) - rank}};
    rec.passed = rank == hook;
  }));
}

void add_grid(Report &report, const RunConfig &c) {
  report.checks.push_back(run_check("grid", {{"n", c.n}}, [&](CheckRecord &rec) {
    std::set<Permutation> distinct;
    for (const auto &row : grid(c.n))
      distinct.insert(row.begin(), row.end());
    const auto cc = consecutive_cycles(c.n);
    const auto target = static_cast<std::size_t>(c.n * c.n - 2 * c.n + 2);
    rec.expected = {{"distinct", target}};
    rec.actual = {{"distinct", distinct.size()},
                  {"equals_consecutive_cycles",
                   std::vector<Permutation>(distinct.begin(), distinct.end()) == cc},
                  {"text", format_grid(c.n)}};
    rec.passed = distinct.size() == target &&
                 std::vector<Permutation>(distinct.begin(), distinct.end()) == cc;
  }));
}

void add_schur_weyl(Report &report, const RunConfig &c) {
  report.checks.push_back(run_check("schur_weyl", nr(c), [&](CheckRecord &rec) {
    auto s = schur_weyl_check(c.n, c.r, c.budget);
    rec.expected = {{"psi_rank", s.orbit_count}, {"solution_space", s.gamma_rank}};
    rec.actual = {{"diagrams", s.diagram_count},   {"psi_rank", s.psi_rank},
                  {"orbit_count", s.orbit_count},  {"span_gamma", s.gamma_rank},
                  {"solution_space", s.linear_system_rank},
                  {"bicommutant", s.bicommutant_rank}};
    rec.passed = s.passed();
  }));
}

void add_hecke(Report &report, const RunConfig &c) {
  const int n = c.n;
  auto limit = [n](int max) {
    if (n > max)
      throw BudgetExceeded("hecke checks are limited to n <= " + std::to_string(max));
  };
  report.checks.push_back(run_check("kl_properties", {{"n", n}}, [&](CheckRecord &rec) {
    limit(5);
    auto p = kl_property_check(n);
    rec.actual = {{"elements", p.elements}, {"failures", p.failures}};
    rec.passed = p.passed();
  }));
  report.checks.push_back(run_check("unitriangularity", {{"n", n}}, [&](CheckRecord &rec) {
    limit(5);
    rec.actual = unitriangularity_check(n);
    rec.passed = rec.actual.get<bool>();
  }));
  report.checks.push_back(run_check("eq10", {{"n", n}}, [&](CheckRecord &rec) {
    limit(4);
    auto e = eq10_check(n);
    Json signs = Json::object();
    for (const auto &[lam, s] : e.signs)
      signs[lam.to_string()] = s;
    rec.actual = {{"pairs", e.pairs_checked}, {"signs", signs}, {"failures", e.failures}};
    rec.passed = e.passed();
  }));
  report.checks.push_back(run_check("geck_triangularity", {{"n", n}}, [&](CheckRecord &rec) {
    limit(4);
    auto g = geck_triangularity_check(n);
    rec.actual = {{"pairs", g.pairs_checked}, {"failures", g.failures}};
    rec.passed = g.passed();
  }));
  if (c.r < 0 || c.r >= n - 1)
    return;
  report.checks.push_back(run_check("annihilator_basis", nr(c), [&](CheckRecord &rec) {
    limit(5);
    auto a = theorem2a_check(n, c.r, c.budget);
    rec.expected = {{"size", a.kernel_dim}};
    rec.actual = {{"size", a.set_size}, {"rank", a.set_rank}, {"annihilates", a.annihilates}};
    rec.passed = a.passed();
  }));
  report.checks.push_back(run_check("quotient_tbasis", nr(c), [&](CheckRecord &rec) {
    limit(5);
    auto q = quotient_tbasis_check(n, c.r, c.budget);
    rec.expected = {{"rank", q.span_rank}};
    rec.actual = {{"complement", words(q.complement)},
                  {"rank", q.complement_rank},
                  {"mixed_basis", q.mixed_basis},
                  {"matches_lis_basis", q.matches_lis_basis}};
    rec.passed = q.passed();
  }));
  report.checks.push_back(run_check("annihilator_specializations", nr(c), [&](CheckRecord &rec) {
    limit(4);
    auto b = annihilator_specialization_check(n, c.r, {Rational(1), Rational(2), Rational(3, 2)});
    Json specs = Json::array();
    for (const auto &s : b.specializations)
      specs.push_back({{"v", to_compact(s.xi)},
                       {"module_dim", s.module_dim},
                       {"annihilator_dim", s.annihilator_dim},
                       {"set_rank", s.set_rank}});
    rec.expected = {{"annihilator_dim", b.set_size}};
    rec.actual = {{"annihilates_generic", b.annihilates_generic}, {"specializations", specs}};
    rec.passed = b.passed();
  }));
}

void add_omega(Report &report, const RunConfig &c) {
  const Json inputs = {{"n", c.n}, {"r", c.r}, {"input", c.input.empty() ? "builtin" : c.input}};
  SparseMatrix m;
  bool member = false;
  report.checks.push_back(run_check("omega_membership", inputs, [&](CheckRecord &rec) {
    m = load_matrix(c);
    const bool ds = is_doubly_stochastic(m);
    member = omega_membership(m, c.n, c.r);
    rec.actual = {{"doubly_stochastic", ds}, {"in_image", member}};
    rec.passed = member;
  }));
  if (!member)
    return;
  report.checks.push_back(run_check("positive_diagonal", inputs, [&](CheckRecord &rec) {
    auto w = positive_kron_diagonal(m, c.n, c.r);
    rec.actual = w ? Json(w->to_string()) : Json(nullptr);
    rec.passed = true;
  }));
  report.checks.push_back(run_check("is_vertex", inputs, [&](CheckRecord &rec) {
    rec.actual = is_vertex(m, c.n, c.r);
    rec.passed = true;
  }));
  report.checks.push_back(run_check("conv_hull", inputs, [&](CheckRecord &rec) {
    auto cert = conv_hull_membership(m, c.n, c.r, c.budget);
    rec.actual = Json::parse(certificate_json(cert));
    rec.passed = verify_certificate(cert, m, c.n, c.r);
  }));
}

void add_decompose(Report &report, const RunConfig &c) {
  const Json inputs = {{"n", c.n}, {"r", c.r}, {"input", c.input.empty() ? "builtin" : c.input}};
  report.checks.push_back(run_check("greedy_decompose", inputs, [&](CheckRecord &rec) {
    auto m = load_matrix(c);
    auto g = greedy_decompose(m, c.n, c.r);
    rec.actual = {{"success", g.success}, {"nonzero_trace", g.nonzero_trace}};
    if (g.success)
      rec.actual["weights"] = weights_json(g.weights);
    else
      rec.actual["residual"] = format_matrix(g.residual);
    rec.passed = g.success;
  }));
}

void add_vertices(Report &report, const RunConfig &c) {
  report.checks.push_back(run_check("vertices", nr(c), [&](CheckRecord &rec) {
    auto dd = enumerate_vertices(c.n, c.r, c.budget);
    auto walk = enumerate_vertices_by_edges(c.n, c.r, c.budget);
    if (!dd.complete || !walk.complete)
      throw BudgetExceeded("vertex enumeration stopped by the ray budget");
    bool agree = dd.vertices.size() == walk.vertices.size();
    for (std::size_t i = 0; agree && i < dd.vertices.size(); ++i)
      agree = dd.vertices[i].matrix == walk.vertices[i].matrix;
    std::map<std::map<std::pair<std::size_t, std::size_t>, Rational>, Permutation> gamma;
    for (const auto &w : all_permutations(c.n))
      gamma.emplace(kron_power(w, c.r).entries(), w);
    std::size_t gamma_count = 0;
    Json files = Json::array();
    if (!c.vertex_dir.empty())
      std::filesystem::create_directories(c.vertex_dir);
    for (std::size_t i = 0; i < dd.vertices.size(); ++i) {
      const auto &v = dd.vertices[i];
      auto it = gamma.find(v.matrix.entries());
      gamma_count += it != gamma.end();
      std::ostringstream name;
      name << "vertex_" << std::setw(3) << std::setfill('0') << i << ".mat";
      files.push_back({{"file", name.str()},
                       {"gamma", it != gamma.end() ? Json(it->second.to_string()) : Json(nullptr)}});
      if (!c.vertex_dir.empty())
        write_text_file(c.vertex_dir + "/" + name.str(), format_matrix(v.matrix));
    }
    if (!c.vertex_dir.empty()) {
      Json index = {{"version", report_version}, {"n", c.n}, {"r", c.r},
                    {"count", dd.vertices.size()}, {"vertices", files}};
      write_text_file(c.vertex_dir + "/index.json", index.dump(2) + "\n");
    }
    rec.actual = {{"double_description", dd.vertices.size()},
                  {"edge_walk", walk.vertices.size()},
                  {"agree", agree},
                  {"gamma_points", gamma_count}};
    if (c.n == 4 && c.r == 2)
      rec.expected = {{"double_description", 162}};
    rec.passed = agree && (c.n != 4 || c.r != 2 || dd.vertices.size() == 162);
  }));
}

void add_counterexample(Report &report, const RunConfig &c) {
  report.checks.push_back(run_check("counterexample", {{"n", 4}, {"r", 2}}, [&](CheckRecord &rec) {
    const auto m = roberson_schmidt_matrix().matrix;
    const bool ds = is_doubly_stochastic(m);
    const bool member = omega_membership(m, 4, 2);
    const auto diag = positive_kron_diagonal(m, 4, 2);
    const auto cert = conv_hull_membership(m, 4, 2, c.budget);
    const bool farkas = cert.farkas && verify_certificate(cert, m, 4, 2);
    if (!c.matrix_out.empty())
      write_text_file(c.matrix_out, format_matrix(m));
    std::string summary = std::string("doubly stochastic: ") + (ds ? "yes" : "no") +
                          "; in im(Φ): " + (member ? "yes" : "no") + "; positive diagonal: " +
                          (diag ? diag->to_string() : "none") + "; conv hull: " +
                          (cert.feasible() ? "feasible" : "infeasible");
    rec.actual = {{"doubly_stochastic", ds},
                  {"in_image", member},
                  {"positive_diagonal", diag ? Json(diag->to_string()) : Json(nullptr)},
                  {"certificate", Json::parse(certificate_json(cert))},
                  {"summary", summary},
                  {"text", format_matrix(m) + summary + "\n"}};
    rec.passed = ds && member && !diag && farkas;
  }));
}

} // namespace

Report execute(const RunConfig &config) {
  Report report;
  report.command = config.subcommand;
  const auto &s = config.subcommand;
  if (s == "basis")
    add_basis(report, config);
  else if (s == "rank")
    add_rank(report, config);
  else if (s == "grid")
    add_grid(report, config);
  else if (s == "schurweyl")
    add_schur_weyl(report, config);
  else if (s == "hecke-verify")
    add_hecke(report, config);
  else if (s == "omega")
    add_omega(report, config);
  else if (s == "decompose")
    add_decompose(report, config);
  else if (s == "vertices")
    add_vertices(report, config);
  else if (s == "counterexample")
    add_counterexample(report, config);
  else if (s == "suite") {
    SuiteOptions options;
    options.seed = config.seed;
    options.samples = config.samples;
    options.budget = config.budget;
    options.data_dir = config.data_dir;
    report = run_suite(options);
  } else
    throw std::invalid_argument("unknown subcommand '" + s + "'");
  return report;
}

int run_cli(int argc, const char *const *argv) {
  CLI::App app{"Exact verification of Kronecker power spans, Omega and Hecke algebra claims",
               "kronspan"};
  RunConfig config;
  std::string direction = "increasing", format = "json";
  app.add_option("--n", config.n, "Rank n of W_n")->envname("KRONSPAN_N")->check(CLI::PositiveNumber);
  app.add_option("--r", config.r, "Tensor power r")->envname("KRONSPAN_R")->check(CLI::NonNegativeNumber);
  app.add_option("--direction", direction, "increasing or decreasing")
      ->envname("KRONSPAN_DIRECTION")
      ->check(CLI::IsMember({"increasing", "decreasing"}));
  app.add_option("--seed", config.seed, "Seed for randomized checks")->envname("KRONSPAN_SEED");
  app.add_option("--samples", config.samples, "Points per sampled family")
      ->envname("KRONSPAN_SAMPLES")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-cells", config.budget.max_cells, "Maximum matrix cells")
      ->envname("KRONSPAN_BUDGET_CELLS")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-perms", config.budget.max_permutations, "Maximum permutations")
      ->envname("KRONSPAN_BUDGET_PERMS")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", config.out, "Report path (default stdout)")->envname("KRONSPAN_OUT");
  app.add_option("--format", format, "json, csv or text")
      ->envname("KRONSPAN_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--input", config.input, "Matrix file for omega and decompose")
      ->envname("KRONSPAN_INPUT");
  app.add_option("--matrix-out", config.matrix_out, "Write the counterexample matrix here");
  app.add_option("--vertex-dir", config.vertex_dir, "Directory for vertex matrix files");
  app.add_option("--data-dir", config.data_dir, "Reference data directory for suite")
      ->envname("KRONSPAN_DATA_DIR");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit wall times from the report");

  const std::pair<const char *, const char *> subcommands[] = {
      {"basis", "Permutations with a long monotone subsequence and their independence"},
      {"rank", "Rank of the Kronecker power family against the RSK count"},
      {"grid", "Consecutive cycle grid for W_n"},
      {"schurweyl", "Partition diagram images, orbit commutant and image equations"},
      {"hecke-verify", "Kazhdan-Lusztig, Murphy and annihilator checks (n <= 5)"},
      {"omega", "Membership, diagonals, vertex test and hull certificate for a matrix"},
      {"decompose", "Greedy Kronecker power decomposition of a matrix"},
      {"vertices", "Vertices of Omega by two independent algorithms"},
      {"counterexample", "The (4,2) doubly stochastic matrix outside conv(Gamma)"},
      {"suite", "Every acceptance criterion"},
  };
  for (const auto &[name, help] : subcommands)
    app.add_subcommand(name, help)->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.direction = direction == "increasing" ? Direction::increasing : Direction::decreasing;
  config.format = parse_format(format);
  config.timing = !no_timing;

  Report report;
  try {
    report = execute(config);
  } catch (const BudgetExceeded &e) {
    std::cerr << "kronspan: " << e.what() << '\n';
    return exit_incomplete;
  } catch (const std::invalid_argument &e) {
    std::cerr << "kronspan: " << e.what() << '\n';
    return exit_usage;
  }
  try {
    emit_report(report, config.format, config.out, config.timing);
  } catch (const std::exception &e) {
    std::cerr << "kronspan: " << e.what() << '\n';
    return exit_check_failed;
  }
  return report.exit_status();
}

} // namespace kronspan
