#include "kronspan/diagram.hpp"
#include "kronspan/linalg.hpp"
#include "kronspan/permutation.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kronspan {

SetPartitionDiagram::SetPartitionDiagram(int r, const std::vector<int> &block_of)
    : r_(r) {
  if (r < 0 || block_of.size() != static_cast<std::size_t>(2 * r))
    throw std::invalid_argument("diagram needs exactly 2r block labels");
  std::map<int, int> renumber;
  rgs_.reserve(block_of.size());
  for (int b : block_of) {
    auto [it, inserted] = renumber.try_emplace(b, static_cast<int>(renumber.size()));
    rgs_.push_back(it->second);
  }
}

SetPartitionDiagram SetPartitionDiagram::parse(std::string_view text, int r) {
  std::vector<int> block_of(static_cast<std::size_t>(2 * r), -1);
  int block = -1;
  std::size_t i = 0;
  bool open = false;
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("diagram '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',') {
      ++i;
    } else if (c == '{') {
      if (open)
        fail("nested block");
      open = true;
      ++block;
      ++i;
    } else if (c == '}') {
      if (!open)
        fail("unbalanced '}'");
      open = false;
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!open)
        fail("label outside a block");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + (text[i++] - '0');
      bool primed = i < text.size() && text[i] == '\'';
      if (primed)
        ++i;
      if (v < 1 || v > r)
        fail("label out of range");
      auto slot = static_cast<std::size_t>(primed ? r + v - 1 : v - 1);
      if (block_of[slot] != -1)
        fail("label repeated");
      block_of[slot] = block;
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }
  if (open)
    fail("unterminated block");
  for (int b : block_of)
    if (b == -1)
      fail("missing label");
  return SetPartitionDiagram(r, block_of);
}

SetPartitionDiagram SetPartitionDiagram::identity(int r) {
  std::vector<int> b(static_cast<std::size_t>(2 * r));
  for (int k = 0; k < r; ++k)
    b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(r + k)] = k;
  return SetPartitionDiagram(r, b);
}

SetPartitionDiagram SetPartitionDiagram::transposition(int r, int k) {
  if (k < 1 || k >= r)
    throw std::invalid_argument("transposition: position out of range");
  std::vector<int> b(static_cast<std::size_t>(2 * r));
  for (int p = 0; p < r; ++p) {
    int bottom = p;
    if (p == k - 1)
      bottom = k;
    else if (p == k)
      bottom = k - 1;
    b[static_cast<std::size_t>(p)] = p;
    b[static_cast<std::size_t>(r + bottom)] = p;
  }
  return SetPartitionDiagram(r, b);
}

SetPartitionDiagram SetPartitionDiagram::p_one(int r) {
  if (r < 1)
    throw std::invalid_argument("p_one: requires r >= 1");
  std::vector<int> b(static_cast<std::size_t>(2 * r));
  for (int k = 0; k < r; ++k)
    b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(r + k)] = k;
  b[static_cast<std::size_t>(r)] = r; // 1' on its own
  return SetPartitionDiagram(r, b);
}

SetPartitionDiagram SetPartitionDiagram::p_three_halves(int r) {
  if (r < 2)
    throw std::invalid_argument("p_three_halves: requires r >= 2");
  std::vector<int> b(static_cast<std::size_t>(2 * r));
  for (int k = 0; k < r; ++k)
    b[static_cast<std::size_t>(k)] = b[static_cast<std::size_t>(r + k)] = k;
  b[1] = b[static_cast<std::size_t>(r + 1)] = 0;
  return SetPartitionDiagram(r, b);
}

int SetPartitionDiagram::block_count() const {
  return rgs_.empty() ? 0 : *std::max_element(rgs_.begin(), rgs_.end()) + 1;
}

std::string SetPartitionDiagram::to_string() const {
  std::string out;
  for (int b = 0; b < block_count(); ++b) {
    out += '{';
    bool first = true;
    for (std::size_t l = 0; l < rgs_.size(); ++l) {
      if (rgs_[l] != b)
        continue;
      if (!first)
        out += ',';
      first = false;
      int label = static_cast<int>(l);
      if (label < r_)
        out += std::to_string(label + 1);
      else
        out += std::to_string(label - r_ + 1) + "'";
    }
    out += '}';
  }
  return out;
}

std::vector<SetPartitionDiagram> enumerate_diagrams(int r) {
  if (r < 1)
    throw std::invalid_argument("enumerate_diagrams: requires r >= 1");
  const std::size_t m = static_cast<std::size_t>(2 * r);
  std::vector<SetPartitionDiagram> out;
  std::vector<int> rgs(m, 0), maxes(m, 0);
  // Iterate restricted growth strings in lexicographic order.
  while (true) {
    out.emplace_back(r, rgs);
    std::size_t i = m;
    while (--i > 0) {
      if (rgs[i] <= maxes[i - 1]) {
        ++rgs[i];
        break;
      }
    }
    if (i == 0)
      break;
    maxes[i] = std::max(maxes[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      maxes[j] = maxes[i];
    }
  }
  return out;
}

unsigned long long bell_number(int m) {
  // Bell triangle.
  std::vector<unsigned long long> row{1};
  for (int i = 1; i <= m; ++i) {
    std::vector<unsigned long long> next{row.back()};
    for (auto v : row)
      next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

SparseMatrix diagram_action(const SetPartitionDiagram &d, int n) {
  if (n < 1)
    throw std::invalid_argument("diagram_action: requires n >= 1");
  const int r = d.r();
  const std::size_t dim = ipow(static_cast<std::size_t>(n), r);
  SparseMatrix m(dim, dim);
  const int blocks = d.block_count();
  std::vector<int> value(static_cast<std::size_t>(blocks), 1);
  std::vector<int> rows(static_cast<std::size_t>(r)), cols(static_cast<std::size_t>(r));
  while (true) {
    for (int k = 0; k < r; ++k) {
      rows[static_cast<std::size_t>(k)] = value[static_cast<std::size_t>(d.blocks()[static_cast<std::size_t>(k)])];
      cols[static_cast<std::size_t>(k)] = value[static_cast<std::size_t>(d.blocks()[static_cast<std::size_t>(r + k)])];
    }
    m.set(flat_index(rows, n), flat_index(cols, n), 1);
    int b = blocks - 1;
    while (b >= 0 && value[static_cast<std::size_t>(b)] == n)
      value[static_cast<std::size_t>(b--)] = 1;
    if (b < 0)
      break;
    ++value[static_cast<std::size_t>(b)];
  }
  return m;
}

namespace {

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

} // namespace

std::vector<SparseMatrix> orbit_commutant_basis(int n, int r) {
  if (n < 1 || r < 0)
    throw std::invalid_argument("orbit_commutant_basis: requires n >= 1, r >= 0");
  const std::size_t dim = ipow(static_cast<std::size_t>(n), r);
  const std::size_t points = dim * dim;
  std::vector<std::size_t> parent(points);
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  // Generator action on flat tuple indices, tabulated once per s_i.
  for (int i = 1; i < n; ++i) {
    const auto s = Permutation::simple_reflection(n, i);
    std::vector<std::size_t> act(dim);
    for (std::size_t f = 0; f < dim; ++f) {
      auto t = index_tuple(f, n, r);
      for (auto &x : t)
        x = s(x);
      act[f] = flat_index(t, n);
    }
    for (std::size_t row = 0; row < dim; ++row)
      for (std::size_t col = 0; col < dim; ++col) {
        std::size_t a = find_root(parent, row * dim + col);
        std::size_t b = find_root(parent, act[row] * dim + act[col]);
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
  }
  std::map<std::size_t, std::size_t> orbit_of_root;
  std::vector<SparseMatrix> out;
  for (std::size_t p = 0; p < points; ++p) {
    std::size_t root = find_root(parent, p);
    auto [it, inserted] = orbit_of_root.try_emplace(root, out.size());
    if (inserted)
      out.emplace_back(dim, dim);
    out[it->second].set(p / dim, p % dim, 1);
  }
  return out;
}

std::vector<SparseVector> commutant_basis(const std::vector<SparseMatrix> &gens) {
  if (gens.empty())
    throw std::invalid_argument("commutant_basis: no generators");
  const std::size_t dim = gens.front().rows();
  const std::size_t unknowns = dim * dim;
  std::vector<SparseVector> equations;
  for (const auto &a : gens) {
    if (a.rows() != dim || a.cols() != dim)
      throw std::invalid_argument("commutant_basis: generators of different sizes");
    std::vector<std::vector<std::pair<std::size_t, Rational>>> by_row(dim), by_col(dim);
    for (const auto &[k, v] : a.entries()) {
      by_row[k.first].emplace_back(k.second, v);
      by_col[k.second].emplace_back(k.first, v);
    }
    // (X A - A X)_{ij} = sum_l x_{il} a_{lj} - sum_l a_{il} x_{lj}.
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        std::vector<SparseVector::Entry> e;
        for (const auto &[l, v] : by_col[j])
          e.emplace_back(i * dim + l, v);
        for (const auto &[l, v] : by_row[i])
          e.emplace_back(l * dim + j, -v);
        SparseVector eq(unknowns, std::move(e));
        if (!eq.is_zero())
          equations.push_back(std::move(eq));
      }
  }
  return kernel_basis(equations, unknowns);
}

SchurWeylReport schur_weyl_check(int n, int r, const Budget &budget) {
  if (n < 1 || r < 1)
    throw std::invalid_argument("schur_weyl_check: requires n >= 1, r >= 1");
  const std::size_t dim = ipow(static_cast<std::size_t>(n), r);
  budget.require_cells(static_cast<unsigned long long>(bell_number(2 * r)) * dim * dim,
                       "schur_weyl_check");
  SchurWeylReport rep;
  rep.n = n;
  rep.r = r;

  std::vector<SparseVector> psi;
  for (const auto &d : enumerate_diagrams(r))
    psi.push_back(diagram_action(d, n).vectorize());
  rep.diagram_count = psi.size();
  rep.psi_rank = rank(psi);

  std::vector<SparseVector> orbits;
  for (const auto &m : orbit_commutant_basis(n, r))
    orbits.push_back(m.vectorize());
  rep.orbit_count = orbits.size();
  rep.commutant_equal = subspace_equal(psi, orbits);

  std::vector<SparseVector> gamma;
  for (const auto &w : all_permutations(n))
    gamma.push_back(kron_power_vector(w, r));
  rep.gamma_rank = rank(gamma);

  auto system = section5_solution_space(n, r, budget, /*verify=*/false);
  rep.linear_system_rank = system.size();
  rep.linear_system_equal = subspace_equal(system, gamma);

  std::vector<SparseMatrix> gens;
  for (int k = 1; k < r; ++k)
    gens.push_back(diagram_action(SetPartitionDiagram::transposition(r, k), n));
  gens.push_back(diagram_action(SetPartitionDiagram::p_one(r), n));
  if (r >= 2)
    gens.push_back(diagram_action(SetPartitionDiagram::p_three_halves(r), n));
  auto bicommutant = commutant_basis(gens);
  rep.bicommutant_rank = bicommutant.size();
  rep.bicommutant_equal = subspace_equal(bicommutant, gamma);

  if (!rep.passed())
    throw VerificationError("Schur-Weyl check failed at (n, r) = (" + std::to_string(n) +
                            ", " + std::to_string(r) + ")");
  return rep;
}

} // namespace kronspan
