#include "doctest.h"
#include "oracles.hpp"

#include "kronspan/diagram.hpp"
#include "kronspan/linalg.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

using namespace kronspan;

namespace {

std::vector<SparseVector> vectorized(const std::vector<SparseMatrix> &ms) {
  std::vector<SparseVector> out;
  for (const auto &m : ms)
    out.push_back(m.vectorize());
  return out;
}

std::vector<SparseMatrix> psi_images(int n, int r) {
  std::vector<SparseMatrix> out;
  for (const auto &d : enumerate_diagrams(r))
    out.push_back(diagram_action(d, n));
  return out;
}

/// Orbits of W_n on pairs of r-tuples by brute force over the group.
std::size_t orbit_count_oracle(int n, int r) {
  const std::size_t dim = ipow(static_cast<std::size_t>(n), r);
  std::set<std::size_t> seen;
  std::size_t orbits = 0;
  const auto group = all_permutations(n);
  for (std::size_t flat = 0; flat < dim * dim; ++flat) {
    if (seen.count(flat))
      continue;
    ++orbits;
    for (const auto &w : group)
      seen.insert(image_index(w, flat / dim, r) * dim + image_index(w, flat % dim, r));
  }
  return orbits;
}

} // namespace

TEST_CASE("diagram enumeration examples") {
  const auto d1 = enumerate_diagrams(1);
  REQUIRE(d1.size() == 2);
  std::set<std::string> names;
  for (const auto &d : d1)
    names.insert(d.to_string());
  CHECK(names == std::set<std::string>{"{1,1'}", "{1}{1'}"});
  CHECK(enumerate_diagrams(2).size() == 15);
  CHECK(enumerate_diagrams(3).size() == 203);
  for (int m = 0; m <= 10; ++m)
    CHECK(bell_number(m) == oracle::bell(m));
}

TEST_CASE("diagram text form") {
  const auto d = SetPartitionDiagram::parse("{1,1'}{2,2'}", 2);
  CHECK(d == SetPartitionDiagram::identity(2));
  CHECK(d.to_string() == "{1,1'}{2,2'}");
  CHECK(SetPartitionDiagram::parse("{2',1}{1',2}", 2).to_string() == "{1,2'}{2,1'}");
  CHECK(SetPartitionDiagram::transposition(2, 1).to_string() == "{1,2'}{2,1'}");
  CHECK(SetPartitionDiagram::p_one(2).to_string() == "{1}{2,2'}{1'}");
  CHECK(SetPartitionDiagram::p_three_halves(2).to_string() == "{1,2,1',2'}");
  CHECK_THROWS(SetPartitionDiagram::parse("{1,1'}", 2));
  CHECK_THROWS(SetPartitionDiagram::parse("{1,1'}{1,2}{2'}", 2));
}

TEST_CASE("diagram action examples") {
  for (int n = 1; n <= 4; ++n)
    CHECK(diagram_action(SetPartitionDiagram::identity(2), n) ==
          SparseMatrix::identity(ipow(n, 2)));
  const auto j = diagram_action(SetPartitionDiagram::parse("{1}{1'}", 1), 3);
  CHECK(j.nonzeros() == 9);
  const auto block = diagram_action(SetPartitionDiagram::p_three_halves(2), 3);
  CHECK(block.nonzeros() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(block.get(static_cast<std::size_t>(4 * i), static_cast<std::size_t>(4 * i)) == 1);
  CHECK(diagram_action(SetPartitionDiagram::transposition(2, 1), 3) ==
        [] {
          SparseMatrix swap(9, 9);
          for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
              swap.set(a * 3 + b, b * 3 + a, 1);
          return swap;
        }());
}

TEST_CASE("orbit commutant examples") {
  CHECK(orbit_commutant_basis(2, 2).size() == 8);
  CHECK(orbit_commutant_basis(4, 2).size() == 15);
  CHECK(orbit_commutant_basis(2, 1).size() == 2);
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r)
      CHECK(orbit_commutant_basis(n, r).size() == orbit_count_oracle(n, r));
}

TEST_CASE("schur weyl reports") {
  struct Case {
    int n, r;
    std::size_t orbits, gamma;
  };
  for (auto c : {Case{2, 2, 8, 2}, Case{3, 2, 14, 6}, Case{4, 2, 15, 23}}) {
    const auto s = schur_weyl_check(c.n, c.r);
    CHECK(s.passed());
    CHECK(s.orbit_count == c.orbits);
    CHECK(s.psi_rank == c.orbits);
    CHECK(s.gamma_rank == c.gamma);
    CHECK(s.linear_system_rank == c.gamma);
  }
}

// Properties

TEST_CASE("property: diagram actions commute with Kronecker powers of generators") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 2; ++r)
      for (const auto &d : enumerate_diagrams(r)) {
        const auto m = diagram_action(d, n);
        for (int i = 1; i < n; ++i) {
          const auto p = kron_power(Permutation::simple_reflection(n, i), r);
          REQUIRE(m * p == p * m);
        }
      }
}

TEST_CASE("property: diagram images span the orbit commutant") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r) {
      if (ipow(n, 2 * r) > 4096)
        continue;
      const auto psi = vectorized(psi_images(n, r));
      const auto orbits = vectorized(orbit_commutant_basis(n, r));
      REQUIRE(subspace_contains(orbits, psi));
      REQUIRE(subspace_equal(psi, orbits));
    }
}

TEST_CASE("property: diagram images are independent exactly when n >= 2r") {
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 2; ++r) {
      const auto k = rank(vectorized(psi_images(n, r)));
      if (n >= 2 * r)
        REQUIRE(k == oracle::bell(2 * r));
      else
        REQUIRE(k < oracle::bell(2 * r));
    }
}

TEST_CASE("property: nonnegative elements of span Gamma rescale into Omega") {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = gen.uniform(2, 4);
    const int r = gen.uniform(1, 2);
    const std::size_t dim = ipow(n, r);
    SparseMatrix m(dim, dim);
    const int terms = gen.uniform(1, 4);
    for (int k = 0; k < terms; ++k)
      m += gen.rational(0, 3) * kron_power(gen.perm(n), r);
    const Rational s = m.row_sums().front();
    if (s == 0) {
      REQUIRE(m.nonzeros() == 0);
      continue;
    }
    const auto scaled = (Rational(1) / s) * m;
    REQUIRE(oracle::doubly_stochastic(scaled));
    REQUIRE(omega_membership(scaled, n, r));
  }
}
