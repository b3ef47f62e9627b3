#include "kronspan/linalg.hpp"

#include <stdexcept>

namespace kronspan {

namespace {

// target -= factor * row, where both are sorted sparse vectors.
void axpy_sub(SparseVector &target, const Rational &factor, const SparseVector &row) {
  SparseVector scaled = row;
  scaled *= -factor;
  target += scaled;
}

std::size_t common_dim(std::span<const SparseVector> rows, std::size_t fallback) {
  std::size_t dim = rows.empty() ? fallback : rows.front().dim();
  for (const auto &r : rows)
    if (r.dim() != dim)
      throw std::invalid_argument("vectors of different dimensions");
  return dim;
}

} // namespace

SparseVector RowEchelon::reduce(SparseVector v) const {
  if (v.dim() != dim_)
    throw std::invalid_argument("RowEchelon: dimension mismatch");
  // Leading columns only move right, so a single left-to-right sweep over
  // the current entries suffices.
  std::size_t from = 0;
  while (true) {
    const auto &e = v.entries();
    auto it = e.begin();
    while (it != e.end() && (it->first < from || !rows_.contains(it->first)))
      ++it;
    if (it == e.end())
      return v;
    std::size_t col = it->first;
    Rational factor = it->second;
    axpy_sub(v, factor, rows_.at(col));
    from = col + 1;
  }
}

bool RowEchelon::insert(const SparseVector &v) {
  SparseVector r = reduce(v);
  if (r.is_zero())
    return false;
  // reduce() cleared every pivot column, so the leading column is new.
  std::size_t lead = r.entries().front().first;
  Rational inv = 1 / Rational(r.entries().front().second);
  r *= inv;
  rows_.emplace(lead, std::move(r));
  return true;
}

std::vector<std::size_t> RowEchelon::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto &[c, row] : rows_)
    out.push_back(c);
  return out;
}

std::vector<SparseVector> RowEchelon::reduced_rows() const {
  std::map<std::size_t, SparseVector> rref = rows_;
  for (auto p = rref.rbegin(); p != rref.rend(); ++p) {
    const std::size_t col = p->first;
    const SparseVector &pivot_row = p->second;
    for (auto &[c, row] : rref) {
      if (c >= col)
        break;
      Rational f = row.at(col);
      if (f != 0)
        axpy_sub(row, f, pivot_row);
    }
  }
  std::vector<SparseVector> out;
  out.reserve(rref.size());
  for (auto &[c, row] : rref)
    out.push_back(std::move(row));
  return out;
}

std::vector<SparseVector> matrix_rows(const SparseMatrix &a) {
  std::vector<std::vector<SparseVector::Entry>> rows(a.rows());
  for (const auto &[k, v] : a.entries())
    rows[k.first].emplace_back(k.second, v);
  std::vector<SparseVector> out;
  out.reserve(a.rows());
  for (auto &r : rows)
    out.emplace_back(a.cols(), std::move(r));
  return out;
}

std::size_t rank(std::span<const SparseVector> rows) {
  if (rows.empty())
    return 0;
  RowEchelon ech(common_dim(rows, 0));
  for (const auto &r : rows)
    ech.insert(r);
  return ech.rank();
}

std::size_t rank(const SparseMatrix &a) {
  auto rows = matrix_rows(a);
  RowEchelon ech(a.cols());
  for (const auto &r : rows)
    ech.insert(r);
  return ech.rank();
}

std::vector<SparseVector> kernel_basis(std::span<const SparseVector> rows,
                                       std::size_t ncols) {
  common_dim(rows, ncols);
  if (!rows.empty() && rows.front().dim() != ncols)
    throw std::invalid_argument("kernel_basis: column count mismatch");
  RowEchelon ech(ncols);
  for (const auto &r : rows)
    ech.insert(r);
  auto rref = ech.reduced_rows();
  std::vector<bool> is_pivot(ncols, false);
  std::vector<std::size_t> pivots = ech.pivot_columns();
  for (auto c : pivots)
    is_pivot[c] = true;

  // Column f of the RREF, as (pivot column, value) pairs.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> by_col(ncols);
  for (std::size_t i = 0; i < rref.size(); ++i)
    for (const auto &[c, v] : rref[i].entries())
      if (!is_pivot[c])
        by_col[c].emplace_back(pivots[i], v);

  std::vector<SparseVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<SparseVector::Entry> e;
    e.emplace_back(f, Rational(1));
    for (const auto &[p, v] : by_col[f])
      e.emplace_back(p, -v);
    basis.emplace_back(ncols, std::move(e));
  }
  return basis;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix &a) {
  auto rows = matrix_rows(a);
  return kernel_basis(rows, a.cols());
}

std::optional<std::vector<Rational>> solve(const SparseMatrix &a,
                                           std::span<const Rational> b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t n = a.cols();
  auto rows = matrix_rows(a);
  RowEchelon ech(n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<SparseVector::Entry> e(rows[i].entries().begin(),
                                       rows[i].entries().end());
    if (b[i] != 0)
      e.emplace_back(n, b[i]);
    ech.insert(SparseVector(n + 1, std::move(e)));
  }
  auto pivots = ech.pivot_columns();
  if (!pivots.empty() && pivots.back() == n)
    return std::nullopt;
  auto rref = ech.reduced_rows();
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < rref.size(); ++i)
    x[pivots[i]] = rref[i].at(n);

  for (std::size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i], x) != b[i])
      throw std::logic_error("solve: back-substitution failed to verify");
  return x;
}

std::optional<std::vector<Rational>>
express_in_span(std::span<const SparseVector> generators, const SparseVector &target) {
  const std::size_t dim = target.dim();
  SparseMatrix a(dim, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].dim() != dim)
      throw std::invalid_argument("express_in_span: dimension mismatch");
    for (const auto &[i, v] : generators[j].entries())
      a.set(i, j, v);
  }
  return solve(a, target.to_dense());
}

bool subspace_equal(std::span<const SparseVector> u, std::span<const SparseVector> v) {
  std::size_t dim = common_dim(u, v.empty() ? 0 : v.front().dim());
  if (common_dim(v, dim) != dim)
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  RowEchelon eu(dim), ev(dim), both(dim);
  for (const auto &x : u) {
    eu.insert(x);
    both.insert(x);
  }
  for (const auto &x : v) {
    ev.insert(x);
    both.insert(x);
  }
  return eu.rank() == ev.rank() && ev.rank() == both.rank();
}

bool subspace_contains(std::span<const SparseVector> v,
                       std::span<const SparseVector> u) {
  std::size_t dim = common_dim(v, u.empty() ? 0 : u.front().dim());
  if (common_dim(u, dim) != dim)
    throw std::invalid_argument("subspace_contains: ambient dimension mismatch");
  RowEchelon ev(dim);
  for (const auto &x : v)
    ev.insert(x);
  for (const auto &x : u)
    if (!ev.contains(x))
      return false;
  return true;
}

} // namespace kronspan
