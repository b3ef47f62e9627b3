#include "doctest.h"
#include "oracles.hpp"

#include "kronspan/cycles.hpp"
#include "kronspan/tensor.hpp"

#include <fstream>
#include <sstream>

using namespace kronspan;

namespace {

Permutation P(const char *word) { return Permutation::parse(word); }

GroupAlgebraElement transposition_mix() {
  GroupAlgebraElement a(4);
  a.add(Permutation::identity(4), Rational(-1, 5));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      std::vector<int> w = {1, 2, 3, 4};
      std::swap(w[i - 1], w[j - 1]);
      a.add(Permutation(w), Rational(1, 5));
    }
  return a;
}

std::string golden(const char *name) {
  std::ifstream in(std::string(KRONSPAN_TEST_DATA) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("tensor index conventions") {
  CHECK(flat_index(std::vector<int>{1, 1}, 4) == 0);
  CHECK(flat_index(std::vector<int>{1, 2}, 4) == 1);
  CHECK(flat_index(std::vector<int>{2, 1}, 4) == 4);
  CHECK(index_tuple(6, 4, 2) == std::vector<int>{2, 3});
  CHECK_THROWS(flat_index(std::vector<int>{0, 1}, 4));
  CHECK(ipow(4, 3) == 64);
}

TEST_CASE("kron_power examples") {
  for (int r = 0; r <= 3; ++r)
    CHECK(kron_power(Permutation::identity(3), r) == SparseMatrix::identity(ipow(3, r)));
  const auto m = kron_power(P("2 1"), 2);
  const std::size_t rows_for_cols[] = {3, 2, 1, 0};
  for (std::size_t col = 0; col < 4; ++col)
    for (std::size_t row = 0; row < 4; ++row)
      CHECK(m.get(row, col) == (row == rows_for_cols[col] ? 1 : 0));
}

TEST_CASE("kron_power matches the dense entry rule") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3 && ipow(n, r) <= 64; ++r)
      for (const auto &w : all_permutations(n)) {
        const auto d = oracle::dense_kron(w, r);
        const auto m = kron_power(w, r);
        for (std::size_t i = 0; i < d.size(); ++i)
          for (std::size_t j = 0; j < d.size(); ++j)
            REQUIRE(m.get(i, j) == d[i][j]);
        REQUIRE(kron_power_vector(w, r) == m.vectorize());
      }
}

TEST_CASE("phi examples") {
  const auto w = P("3 1 2");
  CHECK(phi(GroupAlgebraElement::basis_element(w), 2) == kron_power(w, 2));
  const auto avg = phi(GroupAlgebraElement::uniform_average(4), 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(avg.get(i, j) == Rational(1, 4));
}

TEST_CASE("transposition combination gives the counterexample matrix") {
  const auto m = phi(transposition_mix(), 2);
  CHECK(format_matrix(m) == golden("counterexample.mat"));
  CHECK(m.get(0, 0) == Rational(2, 5));
  // Row (1,2), column (2,1).
  CHECK(m.get(1, 4) == Rational(1, 5));
  for (const auto &s : m.row_sums())
    CHECK(s == 1);
}

TEST_CASE("span rank and kernel dimension examples") {
  CHECK(span_rank(4, 1) == 10);
  CHECK(span_rank(4, 2) == 23);
  CHECK(span_rank(3, 2) == 6);
  CHECK(kernel_dim(4, 2) == 1);
  CHECK(kernel_dim(4, 1) == 14);
  for (int n = 1; n <= 4; ++n)
    for (int r = n - 1; r <= n; ++r)
      CHECK(kernel_dim(n, r) == 0);
  CHECK(kernel_dim(5, 3) == 120 - rsk_count(5, 3));
}

TEST_CASE("lis basis examples") {
  const auto inc = theorem1_basis(4, 2, Direction::increasing);
  auto expected = all_permutations(4);
  expected.erase(std::find(expected.begin(), expected.end(), P("4 3 2 1")));
  CHECK(inc.basis == expected);
  CHECK(inc.basis_rank == 23);
  for (int n = 2; n <= 4; ++n)
    for (auto dir : {Direction::increasing, Direction::decreasing})
      CHECK(theorem1_basis(n, n - 1, dir).basis.size() == factorial(n));
  CHECK(theorem1_basis(4, 1, Direction::increasing).basis == consecutive_cycles(4));
}

TEST_CASE("restricted basis examples") {
  auto b42 = remark4_basis(4, 2);
  CHECK(b42.basis.size() == 6);
  CHECK(b42.basis_rank == 6);
  auto b41 = remark4_basis(4, 1);
  CHECK(b41.basis.size() == 5);
  CHECK(std::find(b41.basis.begin(), b41.basis.end(), P("3 2 1 4")) == b41.basis.end());
  CHECK(remark4_basis(3, 1).basis_rank == 2);
}

TEST_CASE("budget limits") {
  Budget tiny;
  tiny.max_cells = 100;
  CHECK_THROWS_AS(span_rank(4, 2, tiny), BudgetExceeded);
  CHECK_THROWS_AS(theorem1_basis(4, 2, Direction::increasing, tiny), BudgetExceeded);
}

// Properties

TEST_CASE("property: kron_power is a homomorphism") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = gen.uniform(1, 5);
    const int r = gen.uniform(1, n <= 4 ? 3 : 2);
    auto u = gen.perm(n), w = gen.perm(n);
    REQUIRE(kron_power(compose(u, w), r) == kron_power(u, r) * kron_power(w, r));
  }
}

TEST_CASE("property: Kronecker powers are doubly stochastic") {
  oracle::Gen gen(22);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.uniform(1, 5);
    const int r = gen.uniform(0, 3);
    REQUIRE(oracle::doubly_stochastic(kron_power(gen.perm(n), r)));
  }
}

TEST_CASE("property: span rank equals the RSK count") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= 3; ++r) {
      if (n == 6 && r == 3)
        continue;
      unsigned long long by_hooks = 0;
      for (const auto &lam : partitions_of(n))
        if (lam.part(1) >= n - r)
          by_hooks += oracle::count_syt(lam.parts()) * oracle::count_syt(lam.parts());
      std::size_t by_lis = 0;
      for (const auto &w : all_permutations(n))
        by_lis += oracle::lis(w) >= n - r;
      REQUIRE(span_rank(n, r) == by_hooks);
      REQUIRE(by_lis == by_hooks);
      REQUIRE(rsk_count(n, r) == by_hooks);
    }
}

TEST_CASE("property: increasing and decreasing bases differ by w0") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r <= 2; ++r) {
      const auto w0 = longest_element(n);
      const auto inc = theorem1_basis(n, r, Direction::increasing).basis;
      const auto dec = theorem1_basis(n, r, Direction::decreasing).basis;
      std::set<Permutation> moved;
      for (const auto &w : inc)
        moved.insert(compose(w, w0));
      REQUIRE(std::set<Permutation>(dec.begin(), dec.end()) == moved);
      const auto p0 = kron_power(w0, r);
      std::set<std::map<SparseMatrix::Key, Rational>> mats;
      for (const auto &w : inc)
        mats.insert((kron_power(w, r) * p0).entries());
      for (const auto &w : dec)
        REQUIRE(mats.count(kron_power(w, r).entries()) == 1);
    }
}

TEST_CASE("property: phi is linear and multiplicative") {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform(2, 4);
    GroupAlgebraElement a(n), b(n);
    for (int k = 0; k < 3; ++k) {
      a.add(gen.perm(n), gen.rational(-2, 2));
      b.add(gen.perm(n), gen.rational(-2, 2));
    }
    GroupAlgebraElement ab(n), sum(n);
    for (const auto &[u, cu] : a.terms()) {
      sum.add(u, cu);
      for (const auto &[w, cw] : b.terms())
        ab.add(compose(u, w), cu * cw);
    }
    for (const auto &[w, c] : b.terms())
      sum.add(w, c);
    REQUIRE(phi(ab, 2) == phi(a, 2) * phi(b, 2));
    REQUIRE(phi(sum, 2) == phi(a, 2) + phi(b, 2));
  }
}
