#include "doctest.h"
#include "oracles.hpp"

#include "kronspan/linalg.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

#include "json.hpp"

using namespace kronspan;

namespace {

Permutation P(const char *word) { return Permutation::parse(word); }

SparseMatrix mix(const std::vector<std::pair<Permutation, Rational>> &weights, int r) {
  const std::size_t dim = ipow(static_cast<std::size_t>(weights.front().first.size()), r);
  SparseMatrix m(dim, dim);
  for (const auto &[w, c] : weights)
    m += c * kron_power(w, r);
  return m;
}

SparseMatrix rebuild(const std::vector<std::pair<Permutation, Rational>> &weights, int r) {
  return mix(weights, r);
}

/// Rows of X (J (x) I) - (J (x) I) X = 0 over the row-major unknowns.
std::vector<SparseVector> commutation_rows(int n, int r) {
  SparseMatrix j(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      j.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b), 1);
  SparseMatrix a = j;
  for (int k = 1; k < r; ++k)
    a = kronecker(a, SparseMatrix::identity(static_cast<std::size_t>(n)));
  const std::size_t dim = a.rows();
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      std::map<std::size_t, Rational> row;
      for (std::size_t m = 0; m < dim; ++m) {
        row[i * dim + m] += a.get(m, k);
        row[m * dim + k] -= a.get(i, m);
      }
      std::vector<SparseVector::Entry> e;
      for (auto &[idx, v] : row)
        if (v != 0)
          e.emplace_back(idx, v);
      rows.emplace_back(dim * dim, std::move(e));
    }
  return rows;
}

std::vector<SparseVector> gamma_vectors(int n, int r) {
  std::vector<SparseVector> out;
  for (const auto &w : all_permutations(n))
    out.push_back(kron_power_vector(w, r));
  return out;
}

} // namespace

TEST_CASE("image equation solution space dimensions") {
  CHECK(section5_solution_space(3, 2).size() == 6);
  CHECK(section5_solution_space(4, 2).size() == 23);
  CHECK(section5_solution_space(2, 2).size() == 2);
  CHECK(subspace_equal(section5_solution_space(4, 2), gamma_vectors(4, 2)));
}

TEST_CASE("marginal balance is commutation with J tensor I") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r) {
      const std::size_t cols = ipow(static_cast<std::size_t>(n), 2 * r);
      const auto balance = kernel_basis(image_equations(n, r, marginal_balance), cols);
      const auto commute = kernel_basis(commutation_rows(n, r), cols);
      REQUIRE(subspace_equal(balance, commute));
      auto with = image_equations(n, r, place_symmetry | pair_pattern);
      const auto extra = commutation_rows(n, r);
      with.insert(with.end(), extra.begin(), extra.end());
      REQUIRE(subspace_equal(kernel_basis(with, cols), section5_solution_space(n, r)));
    }
}

TEST_CASE("each condition family is needed at (4,2)") {
  const std::size_t cols = 256;
  const auto full = section5_solution_space(4, 2).size();
  for (unsigned drop : {unsigned(place_symmetry), unsigned(pair_pattern), unsigned(marginal_balance)})
    CHECK(kernel_basis(image_equations(4, 2, all_conditions & ~drop), cols).size() > full);
}

TEST_CASE("omega membership examples") {
  for (const auto &w : all_permutations(4))
    CHECK(omega_membership(kron_power(w, 2), 4, 2));
  const auto fig = roberson_schmidt_matrix();
  CHECK(is_doubly_stochastic(fig.matrix));
  CHECK(omega_membership(fig.matrix, 4, 2));
  SparseMatrix flat(16, 16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      flat.set(i, j, Rational(1, 16));
  CHECK(is_doubly_stochastic(flat));
  CHECK(!omega_membership(flat, 4, 2));
  SparseMatrix neg = kron_power(P("2 1 3"), 1);
  neg.set(0, 0, -1);
  CHECK(!is_doubly_stochastic(neg));
  CHECK_THROWS(omega_membership(SparseMatrix(3, 3), 4, 2));
}

TEST_CASE("counterexample entries") {
  const auto fig = roberson_schmidt_matrix().matrix;
  CHECK(fig.get(0, 0) == Rational(2, 5));
  CHECK(fig.get(1, 4) == Rational(1, 5));
  for (const auto &s : fig.row_sums())
    CHECK(s == 1);
  for (const auto &s : fig.col_sums())
    CHECK(s == 1);
  CHECK(fig.nonzeros() == 76);
}

TEST_CASE("positive Kronecker diagonals") {
  for (const auto &w : all_permutations(3))
    CHECK(positive_kron_diagonal(kron_power(w, 2), 3, 2) == w);
  const auto u = P("1 2 3 4"), w = P("2 3 4 1");
  const auto half = mix({{u, Rational(1, 2)}, {w, Rational(1, 2)}}, 2);
  const auto found = positive_kron_diagonal(half, 4, 2);
  REQUIRE(found);
  CHECK((*found == u || *found == w));
  CHECK(!positive_kron_diagonal(roberson_schmidt_matrix().matrix, 4, 2));
}

TEST_CASE("greedy decomposition examples") {
  const auto w = P("3 1 4 2");
  const auto g = greedy_decompose(kron_power(w, 2), 4, 2);
  REQUIRE(g.success);
  REQUIRE(g.weights.size() == 1);
  CHECK(g.weights[0].first == w);
  CHECK(g.weights[0].second == 1);

  const auto m = mix({{P("1 2 3 4"), Rational(1, 4)}, {P("2 1 4 3"), Rational(3, 4)}}, 2);
  const auto g2 = greedy_decompose(m, 4, 2);
  REQUIRE(g2.success);
  CHECK(rebuild(g2.weights, 2) == m);

  const auto g3 = greedy_decompose(roberson_schmidt_matrix().matrix, 4, 2);
  CHECK(!g3.success);
  CHECK(g3.weights.empty());
  CHECK(g3.residual == roberson_schmidt_matrix().matrix);
}

TEST_CASE("convex hull membership examples") {
  {
    const auto avg = phi(GroupAlgebraElement::uniform_average(3), 2);
    const auto cert = conv_hull_membership(avg, 3, 2);
    REQUIRE(cert.feasible());
    CHECK(verify_certificate(cert, avg, 3, 2));
    REQUIRE(cert.weights->size() == 6);
    for (const auto &[w, c] : *cert.weights)
      CHECK(c == Rational(1, 6));
  }
  {
    const auto avg = phi(GroupAlgebraElement::uniform_average(4), 1);
    const auto cert = conv_hull_membership(avg, 4, 1);
    REQUIRE(cert.feasible());
    CHECK(verify_certificate(cert, avg, 4, 1));
  }
  {
    const auto fig = roberson_schmidt_matrix().matrix;
    const auto cert = conv_hull_membership(fig, 4, 2);
    REQUIRE(!cert.feasible());
    REQUIRE(cert.farkas);
    CHECK(verify_certificate(cert, fig, 4, 2));
    const auto j = nlohmann::json::parse(certificate_json(cert));
    CHECK(j.contains("farkas"));
    CHECK(j["farkas"].size() == 16 * 16 + 1);
  }
  {
    const auto m = mix({{P("2 1 3"), Rational(1, 3)}, {P("1 3 2"), Rational(2, 3)}}, 1);
    const auto cert = conv_hull_membership(m, 3, 1);
    const auto j = nlohmann::json::parse(certificate_json(cert));
    REQUIRE(j.contains("weights"));
    CHECK(j["weights"].is_object());
  }
}

TEST_CASE("vertex tests") {
  for (const auto &w : all_permutations(4))
    CHECK(is_vertex(kron_power(w, 2), 4, 2));
  const auto mid = mix({{P("1 2 3 4"), Rational(1, 2)}, {P("2 1 3 4"), Rational(1, 2)}}, 2);
  CHECK(!is_vertex(mid, 4, 2));
  CHECK_NOTHROW((void)is_vertex(roberson_schmidt_matrix().matrix, 4, 2));
  SparseMatrix flat(16, 16);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j)
      flat.set(i, j, Rational(1, 16));
  CHECK_THROWS_AS(is_vertex(flat, 4, 2), std::invalid_argument);
}

TEST_CASE("vertex enumeration on small instances") {
  struct Case {
    int n, r;
    std::size_t count;
  };
  for (auto c : {Case{2, 1, 2}, Case{3, 1, 6}, Case{2, 2, 2}, Case{3, 2, 6}, Case{4, 1, 24}}) {
    const auto dd = enumerate_vertices(c.n, c.r);
    const auto walk = enumerate_vertices_by_edges(c.n, c.r);
    REQUIRE(dd.complete);
    REQUIRE(walk.complete);
    CHECK(dd.vertices.size() == c.count);
    CHECK(walk.vertices.size() == c.count);
    for (std::size_t i = 0; i < dd.vertices.size() && i < walk.vertices.size(); ++i)
      CHECK(dd.vertices[i].matrix == walk.vertices[i].matrix);
  }
}

TEST_CASE("extreme rays of simple cones") {
  using V = std::vector<Integer>;
  const auto orthant = extreme_rays({V{1, 0, 0}, V{0, 1, 0}, V{0, 0, 1}}, 3);
  CHECK(orthant.size() == 3);
  // Cone over a square: x >= 0, y >= 0, z - x >= 0, z - y >= 0.
  const auto square = extreme_rays({V{1, 0, 0}, V{0, 1, 0}, V{-1, 0, 1}, V{0, -1, 1}}, 3);
  CHECK(square.size() == 4);
  CHECK_THROWS_AS(extreme_rays({V{1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("degenerate tensor power") {
  SparseMatrix one = SparseMatrix::identity(1);
  CHECK(omega_membership(one, 3, 0));
  const auto g = greedy_decompose(one, 3, 0);
  CHECK(g.success);
  CHECK(conv_hull_membership(one, 3, 0).feasible());
}

// Properties

TEST_CASE("property: omega is closed under convex combinations") {
  oracle::Gen gen(51);
  for (auto [n, r] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}}) {
    const OmegaGeometry geom(n, r);
    const auto pts = sample_omega_points(geom, 12, 1000 + n * 10 + r);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const Rational t = gen.rational(0, 1, 9);
      if (t < 0 || t > 1)
        continue;
      const auto m = t * pts[k].matrix + Rational(1 - t) * pts[k + 1].matrix;
      REQUIRE(oracle::doubly_stochastic(m));
      REQUIRE(omega_membership(m, n, r));
    }
  }
}

TEST_CASE("property: greedy decomposition succeeds when r >= n-1") {
  for (auto [n, r] : {std::pair{2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
    const OmegaGeometry geom(n, r);
    for (const auto &pt : sample_omega_points(geom, 15, 77)) {
      const auto g = greedy_decompose(pt.matrix, n, r);
      REQUIRE(g.success);
      REQUIRE(rebuild(g.weights, r) == pt.matrix);
      for (std::size_t k = 1; k < g.nonzero_trace.size(); ++k)
        REQUIRE(g.nonzero_trace[k] < g.nonzero_trace[k - 1]);
    }
    oracle::Gen gen(static_cast<std::uint64_t>(n * 100 + r));
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = mix(gen.convex(n, gen.uniform(1, static_cast<int>(std::min<unsigned long long>(factorial(n), 5)))), r);
      const auto g = greedy_decompose(m, n, r);
      REQUIRE(g.success);
      REQUIRE(rebuild(g.weights, r) == m);
    }
  }
}

TEST_CASE("property: convex combinations round trip through the hull LP") {
  oracle::Gen gen(52);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.uniform(2, 4);
    const int r = gen.uniform(1, 2);
    const auto m = mix(gen.convex(n, gen.uniform(1, static_cast<int>(std::min<unsigned long long>(factorial(n), 6)))), r);
    const auto cert = conv_hull_membership(m, n, r);
    REQUIRE(cert.feasible());
    REQUIRE(verify_certificate(cert, m, n, r));
    std::vector<std::pair<Permutation, Rational>> w(cert.weights->begin(), cert.weights->end());
    REQUIRE(rebuild(w, r) == m);
  }
}

TEST_CASE("property: greedy and hull deciders agree at (4,2)") {
  const OmegaGeometry geom(4, 2);
  std::size_t inside = 0, outside = 0;
  auto compare = [&](const SparseMatrix &m) {
    const auto g = greedy_decompose(m, 4, 2);
    const auto cert = conv_hull_membership(m, 4, 2);
    REQUIRE(verify_certificate(cert, m, 4, 2));
    REQUIRE(g.success == cert.feasible());
    (cert.feasible() ? inside : outside) += 1;
  };
  for (const auto &pt : sample_omega_points(geom, 40, 4242))
    compare(pt.matrix);
  oracle::Gen gen(53);
  for (int trial = 0; trial < 10; ++trial)
    compare(mix(gen.convex(4, gen.uniform(1, 5)), 2));
  compare(roberson_schmidt_matrix().matrix);
  CHECK(inside > 0);
  CHECK(outside > 0);
}

TEST_CASE("property: enumerated vertices are rational vertices of omega") {
  for (auto [n, r] : {std::pair{3, 1}, {4, 1}, {3, 2}}) {
    const OmegaGeometry geom(n, r);
    for (const auto &v : enumerate_vertices(n, r).vertices) {
      REQUIRE(omega_membership(v.matrix, n, r));
      REQUIRE(is_vertex(v.matrix, n, r));
      REQUIRE(v.coordinates);
      REQUIRE(geom.to_matrix(*v.coordinates) == v.matrix);
    }
  }
}

TEST_CASE("property: omega coordinates round trip") {
  for (auto [n, r] : {std::pair{3, 2}, {4, 2}}) {
    const OmegaGeometry geom(n, r);
    CHECK(geom.dimension() == span_rank(n, r));
    for (const auto &pt : sample_omega_points(geom, 10, 99)) {
      const auto c = geom.coordinates_of(pt.matrix);
      REQUIRE(c);
      REQUIRE(geom.to_matrix(*c) == pt.matrix);
    }
  }
}
