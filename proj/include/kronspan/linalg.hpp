#pragma once

#include "kronspan/sparse.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace kronspan {

/// Incremental row echelon form over the rationals. Every stored row has a
/// leading 1 in its pivot column and no two rows share a pivot column.
class RowEchelon {
public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the spanned space. Returns false if v was already in the span.
  bool insert(const SparseVector &v);
  /// Remainder of v after elimination against the stored rows; zero iff v is
  /// in the span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector &v) const { return reduce(v).is_zero(); }

  std::vector<std::size_t> pivot_columns() const;
  /// Fully reduced rows (reduced row echelon form), ordered by pivot column.
  std::vector<SparseVector> reduced_rows() const;

private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector> rows_;
};

std::vector<SparseVector> matrix_rows(const SparseMatrix &a);

std::size_t rank(std::span<const SparseVector> rows);
std::size_t rank(const SparseMatrix &a);

/// Basis of {x : A x = 0}, one vector per free column with a 1 there.
std::vector<SparseVector> kernel_basis(std::span<const SparseVector> rows,
                                       std::size_t ncols);
std::vector<SparseVector> kernel_basis(const SparseMatrix &a);

/// Some x with A x = b, or nullopt when the system is inconsistent. The
/// returned x has zeros in every free coordinate.
std::optional<std::vector<Rational>> solve(const SparseMatrix &a,
                                           std::span<const Rational> b);

/// Coefficients expressing `target` in terms of `generators` (as columns),
/// or nullopt when target is outside their span.
std::optional<std::vector<Rational>>
express_in_span(std::span<const SparseVector> generators, const SparseVector &target);

/// span(u) == span(v), decided by rank(u) == rank(v) == rank(u ∪ v).
bool subspace_equal(std::span<const SparseVector> u, std::span<const SparseVector> v);
/// span(u) ⊆ span(v).
bool subspace_contains(std::span<const SparseVector> v,
                       std::span<const SparseVector> u);

} // namespace kronspan
