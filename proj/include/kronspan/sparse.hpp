#pragma once

#include "kronspan/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kronspan {

/// Sparse vector over the rationals with strictly increasing indices and no
/// stored zeros.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}
  /// Entries may arrive unsorted and with repeated indices; repeats are summed.
  SparseVector(std::size_t dim, std::vector<Entry> entries);

  static SparseVector from_dense(std::span<const Rational> values);

  std::size_t dim() const { return dim_; }
  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  Rational at(std::size_t index) const;
  std::vector<Rational> to_dense() const;

  SparseVector &operator+=(const SparseVector &other);
  SparseVector &operator*=(const Rational &factor);

  bool operator==(const SparseVector &other) const = default;

private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

SparseVector operator+(SparseVector lhs, const SparseVector &rhs);
SparseVector operator*(const Rational &factor, SparseVector v);
Rational dot(const SparseVector &a, std::span<const Rational> dense);

/// Exact sparse matrix. Entries are kept in row-major order, which fixes the
/// order of the text serialization.
class SparseMatrix {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::size_t size);
  static SparseMatrix from_row_major(const SparseVector &flat, std::size_t rows,
                                     std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  const std::map<Key, Rational> &entries() const { return entries_; }

  Rational get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Rational &value);
  void add_to(std::size_t row, std::size_t col, const Rational &value);

  std::vector<Rational> row_sums() const;
  std::vector<Rational> col_sums() const;
  SparseMatrix transposed() const;
  /// Row-major flattening: entry (i, j) lands at i * cols + j.
  SparseVector vectorize() const;

  SparseMatrix &operator+=(const SparseMatrix &other);
  SparseMatrix &operator-=(const SparseMatrix &other);
  SparseMatrix &operator*=(const Rational &factor);

  bool operator==(const SparseMatrix &other) const = default;

private:
  void check_index(std::size_t row, std::size_t col) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Rational> entries_;
};

SparseMatrix operator+(SparseMatrix lhs, const SparseMatrix &rhs);
SparseMatrix operator-(SparseMatrix lhs, const SparseMatrix &rhs);
SparseMatrix operator*(const Rational &factor, SparseMatrix m);
SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b);
SparseMatrix kronecker(const SparseMatrix &a, const SparseMatrix &b);

/// Text format: a header line "nrows ncols" followed by one line
/// "row col num/den" per nonzero, 0-based, row-major, lowest terms.
void write_matrix(std::ostream &out, const SparseMatrix &m);
std::string format_matrix(const SparseMatrix &m);
/// Throws std::invalid_argument with the offending line number.
SparseMatrix read_matrix(std::istream &in);
SparseMatrix parse_matrix(const std::string &text);

} // namespace kronspan
