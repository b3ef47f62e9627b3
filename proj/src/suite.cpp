#include "kronspan/suite.hpp"
#include "kronspan/annihilator.hpp"
#include "kronspan/cycles.hpp"
#include "kronspan/diagram.hpp"
#include "kronspan/linalg.hpp"
#include "kronspan/murphy.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#ifndef KRONSPAN_DATA_DIR
#define KRONSPAN_DATA_DIR "tests/data"
#endif

namespace kronspan {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Json pair_list(const Pairs &pairs) {
  Json out = Json::array();
  for (auto [n, r] : pairs)
    out.push_back(Json::array({n, r}));
  return out;
}

std::string key(int n, int r) { return std::to_string(n) + "," + std::to_string(r); }

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

std::string default_data_dir() {
  if (const char *env = std::getenv("KRONSPAN_DATA_DIR"); env && *env)
    return env;
  return KRONSPAN_DATA_DIR;
}

CheckRecord criterion_kronecker_bases(const SuiteOptions &options) {
  Pairs cases;
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= 2; ++r)
      cases.emplace_back(n, r);
  for (int n = 2; n <= 5; ++n)
    cases.emplace_back(n, 3);
  return run_check("1 kronecker_bases", {{"cases", pair_list(cases)}}, [&](CheckRecord &rec) {
    Json actual = Json::object(), expected = Json::object();
    bool ok = true;
    for (auto [n, r] : cases) {
      auto inc = theorem1_basis(n, r, Direction::increasing, options.budget);
      auto dec = theorem1_basis(n, r, Direction::decreasing, options.budget);
      const auto w0 = longest_element(n);
      const auto p0 = kron_power(w0, r);
      std::vector<Permutation> shifted;
      bool product_ok = true;
      for (const auto &w : inc.basis) {
        shifted.push_back(compose(w, w0));
        product_ok = product_ok && kron_power(w, r) * p0 == kron_power(shifted.back(), r);
      }
      std::sort(shifted.begin(), shifted.end());
      auto dec_sorted = dec.basis;
      std::sort(dec_sorted.begin(), dec_sorted.end());
      const auto hook = rsk_count(n, r);
      const bool case_ok = inc.basis.size() == inc.span_rank && inc.basis_rank == inc.span_rank &&
                           inc.span_rank == hook && dec.basis_rank == dec.span_rank &&
                           dec.basis.size() == hook && shifted == dec_sorted && product_ok;
      ok = ok && case_ok;
      actual[key(n, r)] = {{"increasing", inc.basis.size()},
                           {"span_rank", inc.span_rank},
                           {"decreasing", dec.basis.size()},
                           {"decreasing_is_right_w0_shift", shifted == dec_sorted && product_ok}};
      expected[key(n, r)] = hook;
    }
    rec.actual = actual;
    rec.expected = expected;
    rec.passed = ok;
  });
}

CheckRecord criterion_consecutive_cycles(const SuiteOptions &) {
  return run_check("2 consecutive_cycles", {{"n", Json::array({2, 10})}}, [&](CheckRecord &rec) {
    Json actual = Json::object(), expected = Json::object();
    bool ok = true;
    for (int n = 2; n <= 10; ++n) {
      std::vector<Permutation> filtered;
      std::vector<int> word(static_cast<std::size_t>(n));
      std::iota(word.begin(), word.end(), 1);
      do {
        Permutation w(word);
        if (lis(w) >= n - 1)
          filtered.push_back(w);
      } while (std::next_permutation(word.begin(), word.end()));
      const auto cc = consecutive_cycles(n);
      const auto g = grid(n);
      std::set<Permutation> from_grid;
      for (const auto &row : g)
        from_grid.insert(row.begin(), row.end());
      bool restricts = true;
      const auto smaller = grid(n - 1);
      for (int k = 1; k < n; ++k)
        for (int j = 1; j < n; ++j)
          restricts = restricts && g[k - 1][j - 1] == extend(smaller[k - 1][j - 1], n);
      const std::size_t target = static_cast<std::size_t>(n * n - 2 * n + 2);
      const bool case_ok = filtered == cc && cc.size() == target &&
                           std::vector<Permutation>(from_grid.begin(), from_grid.end()) == cc &&
                           restricts;
      ok = ok && case_ok;
      actual[std::to_string(n)] = {{"lis_filter", filtered.size()},
                                   {"consecutive_cycles", cc.size()},
                                   {"grid_distinct", from_grid.size()},
                                   {"sets_equal", case_ok},
                                   {"restricts", restricts}};
      expected[std::to_string(n)] = target;
    }
    rec.actual = actual;
    rec.expected = expected;
    rec.passed = ok;
  });
}

CheckRecord criterion_counterexample(const SuiteOptions &options) {
  const auto dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;
  return run_check("3 counterexample", {{"golden", dir + "/counterexample.mat"}},
                   [&](CheckRecord &rec) {
                     const auto m = roberson_schmidt_matrix().matrix;
                     const bool bytes = format_matrix(m) == read_file(dir + "/counterexample.mat");
                     const bool ds = is_doubly_stochastic(m);
                     const bool member = omega_membership(m, 4, 2);
                     const auto diag = positive_kron_diagonal(m, 4, 2);
                     const auto cert = conv_hull_membership(m, 4, 2, options.budget);
                     const bool farkas = cert.farkas.has_value() && verify_certificate(cert, m, 4, 2);
                     rec.expected = {{"byte_exact", true},
                                     {"doubly_stochastic", true},
                                     {"in_image", true},
                                     {"positive_diagonal", nullptr},
                                     {"conv_hull", "infeasible, verified Farkas"}};
                     rec.actual = {{"byte_exact", bytes},
                                   {"doubly_stochastic", ds},
                                   {"in_image", member},
                                   {"positive_diagonal",
                                    diag ? Json(diag->to_string()) : Json(nullptr)},
                                   {"conv_hull", cert.feasible()      ? "feasible"
                                                 : farkas             ? "infeasible, verified Farkas"
                                                                      : "infeasible, unverified"}};
                     rec.passed = bytes && ds && member && !diag && farkas;
                   });
}

CheckRecord criterion_vertices_and_greedy(const SuiteOptions &options) {
  const Pairs cases{{2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}};
  return run_check("4 gamma_vertices_and_greedy",
                   {{"cases", pair_list(cases)}, {"samples", options.samples},
                    {"seed", options.seed}},
                   [&](CheckRecord &rec) {
                     std::size_t vertices = 0;
                     OmegaGeometry g42(4, 2, options.budget);
                     for (const auto &w : all_permutations(4))
                       vertices += is_vertex(g42, *g42.coordinates_of(kron_power(w, 2))) ? 1 : 0;
                     Json greedy = Json::object();
                     bool ok = vertices == 24;
                     for (auto [n, r] : cases) {
                       OmegaGeometry geom(n, r, options.budget);
                       std::size_t successes = 0;
                       for (const auto &p : sample_omega_points(geom, options.samples, options.seed)) {
                         auto result = greedy_decompose(p.matrix, n, r);
                         SparseMatrix rebuilt(p.matrix.rows(), p.matrix.cols());
                         Rational total;
                         for (const auto &[w, c] : result.weights) {
                           rebuilt += c * kron_power(w, r);
                           total += c;
                         }
                         if (result.success && rebuilt == p.matrix && total == 1)
                           ++successes;
                       }
                       greedy[key(n, r)] = successes;
                       ok = ok && successes == options.samples;
                     }
                     rec.expected = {{"gamma_vertices", 24}, {"greedy_successes", options.samples}};
                     rec.actual = {{"gamma_vertices", vertices}, {"greedy_successes", greedy}};
                     rec.passed = ok;
                   });
}

CheckRecord criterion_vertex_count(const SuiteOptions &options) {
  return run_check("5 vertex_count", {{"n", 4}, {"r", 2}}, [&](CheckRecord &rec) {
    auto dd = enumerate_vertices(4, 2, options.budget);
    auto walk = enumerate_vertices_by_edges(4, 2, options.budget);
    if (!dd.complete || !walk.complete)
      throw BudgetExceeded("vertex enumeration stopped by the ray budget");
    bool agree = dd.vertices.size() == walk.vertices.size();
    for (std::size_t i = 0; agree && i < dd.vertices.size(); ++i)
      agree = dd.vertices[i].matrix == walk.vertices[i].matrix;
    std::size_t passing = 0, gamma = 0;
    std::set<std::map<std::pair<std::size_t, std::size_t>, Rational>> gamma_points;
    for (const auto &w : all_permutations(4))
      gamma_points.insert(kron_power(w, 2).entries());
    for (const auto &v : dd.vertices) {
      passing += is_vertex(v.matrix, 4, 2) ? 1 : 0;
      gamma += gamma_points.count(v.matrix.entries());
    }
    rec.expected = {{"vertices", 162}, {"gamma_points", 24}, {"algorithms_agree", true}};
    rec.actual = {{"vertices", dd.vertices.size()},
                  {"edge_walk_vertices", walk.vertices.size()},
                  {"passing_vertex_test", passing},
                  {"gamma_points", gamma},
                  {"algorithms_agree", agree}};
    rec.passed = dd.vertices.size() == 162 && agree && passing == 162 && gamma == 24;
  });
}

CheckRecord criterion_schur_weyl(const SuiteOptions &options) {
  const Pairs cases{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}};
  return run_check("6 schur_weyl", {{"cases", pair_list(cases)}}, [&](CheckRecord &rec) {
    Json actual = Json::object(), expected = Json::object();
    bool ok = true;
    for (auto [n, r] : cases) {
      auto s = schur_weyl_check(n, r, options.budget);
      const auto gamma = span_rank(n, r, options.budget);
      ok = ok && s.passed() && s.psi_rank == s.orbit_count && s.linear_system_rank == gamma;
      actual[key(n, r)] = {{"psi_rank", s.psi_rank},
                           {"orbit_count", s.orbit_count},
                           {"solution_space", s.linear_system_rank},
                           {"span_gamma", s.gamma_rank}};
      expected[key(n, r)] = {{"psi_rank", s.orbit_count}, {"solution_space", gamma}};
    }
    rec.actual = actual;
    rec.expected = expected;
    rec.passed = ok;
  });
}

CheckRecord criterion_hecke(const SuiteOptions &options) {
  const Pairs cases{{4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}};
  return run_check("7 hecke", {{"n_max", 4}, {"annihilator_cases", pair_list(cases)}}, [&](CheckRecord &rec) {
    bool ok = true;
    Json kl = Json::object(), eq10 = Json::object(), geck = Json::object();
    for (int n = 1; n <= 4; ++n) {
      auto p = kl_property_check(n);
      kl[std::to_string(n)] = p.passed();
      ok = ok && p.passed();
      auto e = eq10_check(n);
      Json signs = Json::object();
      for (const auto &[lam, s] : e.signs)
        signs[lam.to_string()] = s;
      eq10[std::to_string(n)] = {{"passed", e.passed()}, {"signs", signs}};
      ok = ok && e.passed();
      auto gk = geck_triangularity_check(n);
      geck[std::to_string(n)] = gk.passed();
      ok = ok && gk.passed();
    }
    Json kernels = Json::object(), expected_kernels = Json::object();
    for (auto [n, r] : cases) {
      auto a = theorem2a_check(n, r, options.budget);
      const auto by_hook = static_cast<std::size_t>(factorial(n) - rsk_count(n, r));
      ok = ok && a.passed() && a.kernel_dim == by_hook;
      kernels[key(n, r)] = a.set_size;
      expected_kernels[key(n, r)] = {{"elimination", a.kernel_dim}, {"hook_length", by_hook}};
    }
    rec.actual = {{"kl_bar_and_degree", kl},
                  {"eq10", eq10},
                  {"geck", geck},
                  {"annihilator_sizes", kernels},
                  {"note", "listed value 96 for (5,1) disagrees with 120 - (5^2-2*5+2) = 103"}};
    rec.expected = {{"annihilator_sizes", expected_kernels}};
    rec.passed = ok;
  });
}

CheckRecord criterion_restricted_bases(const SuiteOptions &options) {
  const Pairs cases{{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}};
  return run_check("8 restricted_bases", {{"cases", pair_list(cases)}}, [&](CheckRecord &rec) {
    Json actual = Json::object(), expected = Json::object();
    bool ok = true;
    for (auto [n, r] : cases) {
      auto b = remark4_basis(n, r, options.budget);
      const auto smaller_rank = span_rank(n - 1, r, options.budget);
      ok = ok && b.basis.size() == b.basis_rank && b.basis_rank == b.span_rank &&
           b.span_rank == smaller_rank;
      actual[key(n, r)] = {{"basis", b.basis.size()}, {"rank", b.basis_rank}};
      expected[key(n, r)] = smaller_rank;
    }
    rec.actual = actual;
    rec.expected = expected;
    rec.passed = ok;
  });
}

Report run_suite(const SuiteOptions &options) {
  Report report;
  report.command = "suite";
  report.checks.push_back(criterion_kronecker_bases(options));
  report.checks.push_back(criterion_consecutive_cycles(options));
  report.checks.push_back(criterion_counterexample(options));
  report.checks.push_back(criterion_vertices_and_greedy(options));
  report.checks.push_back(criterion_vertex_count(options));
  report.checks.push_back(criterion_schur_weyl(options));
  report.checks.push_back(criterion_hecke(options));
  report.checks.push_back(criterion_restricted_bases(options));
  return report;
}

} // namespace kronspan
