#include "kronspan/tensor.hpp"
#include "kronspan/linalg.hpp"
#include "kronspan/tableau.hpp"

#include <stdexcept>

namespace kronspan {

std::size_t ipow(std::size_t base, int exp) {
  if (exp < 0)
    throw std::invalid_argument("ipow: negative exponent");
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > (std::size_t{1} << 62) / base)
      throw std::overflow_error("ipow: overflow");
    out *= base;
  }
  return out;
}

std::size_t flat_index(std::span<const int> tuple, int n) {
  std::size_t f = 0;
  for (int i : tuple) {
    if (i < 1 || i > n)
      throw std::out_of_range("tensor index component out of range");
    f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1);
  }
  return f;
}

std::vector<int> index_tuple(std::size_t flat, int n, int r) {
  if (flat >= ipow(static_cast<std::size_t>(n), r))
    throw std::out_of_range("flat tensor index out of range");
  std::vector<int> t(static_cast<std::size_t>(r));
  for (int k = r; k-- > 0;) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(n)) + 1;
    flat /= static_cast<std::size_t>(n);
  }
  return t;
}

std::size_t image_index(const Permutation &w, std::size_t col, int r) {
  const auto n = static_cast<std::size_t>(w.size());
  std::size_t out = 0, scale = 1;
  for (int k = 0; k < r; ++k) {
    auto digit = static_cast<int>(col % n);
    out += static_cast<std::size_t>(w(digit + 1) - 1) * scale;
    col /= n;
    scale *= n;
  }
  return out;
}

SparseMatrix kron_power(const Permutation &w, int r) {
  if (r < 0)
    throw std::invalid_argument("kron_power: r must be nonnegative");
  const std::size_t dim = ipow(static_cast<std::size_t>(w.size()), r);
  SparseMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col)
    m.set(image_index(w, col, r), col, 1);
  return m;
}

SparseVector kron_power_vector(const Permutation &w, int r) {
  if (r < 0)
    throw std::invalid_argument("kron_power_vector: r must be nonnegative");
  const std::size_t dim = ipow(static_cast<std::size_t>(w.size()), r);
  std::vector<SparseVector::Entry> e;
  e.reserve(dim);
  for (std::size_t col = 0; col < dim; ++col)
    e.emplace_back(image_index(w, col, r) * dim + col, Rational(1));
  return SparseVector(dim * dim, std::move(e));
}

GroupAlgebraElement GroupAlgebraElement::basis_element(const Permutation &w) {
  GroupAlgebraElement a(w.size());
  a.add(w, 1);
  return a;
}

GroupAlgebraElement GroupAlgebraElement::uniform_average(int n) {
  GroupAlgebraElement a(n);
  Rational c(Integer(1), Integer(static_cast<unsigned long>(factorial(n))));
  c.canonicalize();
  for (const auto &w : all_permutations(n))
    a.add(w, c);
  return a;
}

Rational GroupAlgebraElement::coefficient(const Permutation &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation &w, const Rational &c) {
  if (w.size() != n_)
    throw std::invalid_argument("group algebra element: permutation of wrong size");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

SparseMatrix phi(const GroupAlgebraElement &a, int r) {
  const std::size_t dim = ipow(static_cast<std::size_t>(a.degree()), r);
  SparseMatrix m(dim, dim);
  for (const auto &[w, c] : a.terms())
    for (std::size_t col = 0; col < dim; ++col)
      m.add_to(image_index(w, col, r), col, c);
  return m;
}

namespace {

void check_budget(int n, int r, const Budget &budget, const char *what) {
  if (n < 1 || r < 0)
    throw std::invalid_argument(std::string(what) + ": requires n >= 1, r >= 0");
  budget.require_permutations(factorial(n), what);
  const auto dim = ipow(static_cast<std::size_t>(n), r);
  budget.require_cells(static_cast<unsigned long long>(dim) * dim * factorial(n), what);
}

} // namespace

std::size_t span_rank(int n, int r, const Budget &budget) {
  check_budget(n, r, budget, "span_rank");
  const std::size_t dim = ipow(static_cast<std::size_t>(n), r);
  RowEchelon ech(dim * dim);
  for (const auto &w : all_permutations(n))
    ech.insert(kron_power_vector(w, r));
  return ech.rank();
}

unsigned long long rsk_count(int n, int r) {
  unsigned long long total = 0;
  for (const auto &lam : partitions_of(n))
    if (lam.part(1) >= n - r) {
      auto f = hook_length_count(lam);
      total += f * f;
    }
  return total;
}

std::size_t kernel_dim(int n, int r, const Budget &budget) {
  return factorial(n) - span_rank(n, r, budget);
}

BasisReport verify_basis(std::vector<Permutation> subset,
                         std::span<const Permutation> family, int r) {
  BasisReport report;
  if (family.empty())
    return report;
  const std::size_t dim = ipow(static_cast<std::size_t>(family.front().size()), r);
  RowEchelon ech(dim * dim);
  for (const auto &w : subset)
    ech.insert(kron_power_vector(w, r));
  report.basis_rank = ech.rank();
  for (const auto &w : family)
    ech.insert(kron_power_vector(w, r));
  report.span_rank = ech.rank();
  report.basis = std::move(subset);
  return report;
}

BasisReport theorem1_basis(int n, int r, Direction direction, const Budget &budget) {
  check_budget(n, r, budget, "theorem1_basis");
  const auto all = all_permutations(n);
  std::vector<Permutation> subset;
  for (const auto &w : all) {
    int len = direction == Direction::increasing ? lis(w) : lds(w);
    if (len >= n - r)
      subset.push_back(w);
  }
  auto report = verify_basis(std::move(subset), all, r);
  if (report.basis_rank != report.basis.size() || report.span_rank != report.basis.size())
    throw VerificationError("basis check failed at (n, r) = (" + std::to_string(n) +
                            ", " + std::to_string(r) + "): " +
                            std::to_string(report.basis.size()) + " candidates, rank " +
                            std::to_string(report.basis_rank) + ", span rank " +
                            std::to_string(report.span_rank));
  return report;
}

BasisReport remark4_basis(int n, int r, const Budget &budget) {
  if (n < 2)
    throw std::invalid_argument("remark4_basis: requires n >= 2");
  check_budget(n - 1, r, budget, "remark4_basis");
  std::vector<Permutation> family, subset;
  for (const auto &u : all_permutations(n - 1)) {
    Permutation w = extend(u, n);
    family.push_back(w);
    if (lis(u) >= n - 1 - r)
      subset.push_back(w);
  }
  auto report = verify_basis(std::move(subset), family, r);
  if (report.basis_rank != report.basis.size() || report.span_rank != report.basis.size())
    throw VerificationError("restricted basis check failed at (n, r) = (" +
                            std::to_string(n) + ", " + std::to_string(r) + ")");
  return report;
}

} // namespace kronspan
