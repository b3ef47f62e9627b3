#include "kronspan/sparse.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kronspan {

SparseVector::SparseVector(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry &a, const Entry &b) { return a.first < b.first; });
  for (auto &[index, value] : entries) {
    if (index >= dim_)
      throw std::out_of_range("sparse vector index " + std::to_string(index) +
                              " out of range " + std::to_string(dim_));
    if (!entries_.empty() && entries_.back().first == index)
      entries_.back().second += value;
    else
      entries_.emplace_back(index, std::move(value));
    if (entries_.back().second == 0)
      entries_.pop_back();
  }
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0)
      v.entries_.emplace_back(i, values[i]);
  return v;
}

Rational SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry &e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index)
    return it->second;
  return 0;
}

std::vector<Rational> SparseVector::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto &[i, v] : entries_)
    out[i] = v;
  return out;
}

SparseVector &SparseVector::operator+=(const SparseVector &other) {
  if (other.dim_ != dim_)
    throw std::invalid_argument("sparse vector dimension mismatch");
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0)
        merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

SparseVector &SparseVector::operator*=(const Rational &factor) {
  if (factor == 0) {
    entries_.clear();
    return *this;
  }
  for (auto &e : entries_)
    e.second *= factor;
  return *this;
}

SparseVector operator+(SparseVector lhs, const SparseVector &rhs) {
  lhs += rhs;
  return lhs;
}

SparseVector operator*(const Rational &factor, SparseVector v) {
  v *= factor;
  return v;
}

Rational dot(const SparseVector &a, std::span<const Rational> dense) {
  if (a.dim() != dense.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (const auto &[i, v] : a.entries())
    s += v * dense[i];
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t size) {
  SparseMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    m.entries_.emplace_hint(m.entries_.end(), Key{i, i}, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::from_row_major(const SparseVector &flat,
                                          std::size_t rows, std::size_t cols) {
  if (flat.dim() != rows * cols)
    throw std::invalid_argument("from_row_major: length does not match shape");
  SparseMatrix m(rows, cols);
  for (const auto &[i, v] : flat.entries())
    m.entries_.emplace_hint(m.entries_.end(), Key{i / cols, i % cols}, v);
  return m;
}

void SparseMatrix::check_index(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") out of range");
}

Rational SparseMatrix::get(std::size_t row, std::size_t col) const {
  check_index(row, col);
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational &value) {
  check_index(row, col);
  if (value == 0) {
    entries_.erase({row, col});
    return;
  }
  Rational &slot = entries_[{row, col}];
  slot = value;
  slot.canonicalize();
}

void SparseMatrix::add_to(std::size_t row, std::size_t col, const Rational &value) {
  check_index(row, col);
  if (value == 0)
    return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (inserted)
    it->second.canonicalize();
  else if ((it->second += value) == 0)
    entries_.erase(it);
}

std::vector<Rational> SparseMatrix::row_sums() const {
  std::vector<Rational> s(rows_);
  for (const auto &[k, v] : entries_)
    s[k.first] += v;
  return s;
}

std::vector<Rational> SparseMatrix::col_sums() const {
  std::vector<Rational> s(cols_);
  for (const auto &[k, v] : entries_)
    s[k.second] += v;
  return s;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols_, rows_);
  for (const auto &[k, v] : entries_)
    t.entries_.emplace(Key{k.second, k.first}, v);
  return t;
}

SparseVector SparseMatrix::vectorize() const {
  std::vector<SparseVector::Entry> flat;
  flat.reserve(entries_.size());
  for (const auto &[k, v] : entries_)
    flat.emplace_back(k.first * cols_ + k.second, v);
  return SparseVector(rows_ * cols_, std::move(flat));
}

SparseMatrix &SparseMatrix::operator+=(const SparseMatrix &other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw std::invalid_argument("matrix shape mismatch in addition");
  for (const auto &[k, v] : other.entries_)
    add_to(k.first, k.second, v);
  return *this;
}

SparseMatrix &SparseMatrix::operator-=(const SparseMatrix &other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw std::invalid_argument("matrix shape mismatch in subtraction");
  for (const auto &[k, v] : other.entries_)
    add_to(k.first, k.second, -v);
  return *this;
}

SparseMatrix &SparseMatrix::operator*=(const Rational &factor) {
  if (factor == 0) {
    entries_.clear();
    return *this;
  }
  for (auto &[k, v] : entries_)
    v *= factor;
  return *this;
}

SparseMatrix operator+(SparseMatrix lhs, const SparseMatrix &rhs) {
  lhs += rhs;
  return lhs;
}

SparseMatrix operator-(SparseMatrix lhs, const SparseMatrix &rhs) {
  lhs -= rhs;
  return lhs;
}

SparseMatrix operator*(const Rational &factor, SparseMatrix m) {
  m *= factor;
  return m;
}

SparseMatrix operator*(const SparseMatrix &a, const SparseMatrix &b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch in product");
  std::vector<std::vector<std::pair<std::size_t, Rational>>> brows(b.rows());
  for (const auto &[k, v] : b.entries())
    brows[k.first].emplace_back(k.second, v);
  SparseMatrix out(a.rows(), b.cols());
  for (const auto &[k, av] : a.entries())
    for (const auto &[j, bv] : brows[k.second])
      out.add_to(k.first, j, av * bv);
  return out;
}

SparseMatrix kronecker(const SparseMatrix &a, const SparseMatrix &b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto &[ka, va] : a.entries())
    for (const auto &[kb, vb] : b.entries())
      out.set(ka.first * b.rows() + kb.first, ka.second * b.cols() + kb.second,
              va * vb);
  return out;
}

void write_matrix(std::ostream &out, const SparseMatrix &m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (const auto &[k, v] : m.entries())
    out << k.first << ' ' << k.second << ' ' << to_fraction(v) << '\n';
}

std::string format_matrix(const SparseMatrix &m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

SparseMatrix read_matrix(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string &why) {
    throw std::invalid_argument("matrix file line " + std::to_string(line_no) +
                                ": " + why);
  };
  SparseMatrix m;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::istringstream ls(line);
    if (!have_header) {
      long long r = -1, c = -1;
      if (!(ls >> r >> c) || r < 0 || c < 0)
        fail("expected header 'nrows ncols'");
      m = SparseMatrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      have_header = true;
      continue;
    }
    long long r = -1, c = -1;
    std::string value;
    if (!(ls >> r >> c >> value) || r < 0 || c < 0)
      fail("expected 'row col num/den'");
    if (static_cast<std::size_t>(r) >= m.rows() ||
        static_cast<std::size_t>(c) >= m.cols())
      fail("index out of range");
    Rational q;
    try {
      q = parse_rational(value);
    } catch (const std::invalid_argument &e) {
      fail(e.what());
    }
    if (value.find('/') != std::string::npos && to_fraction(q) != value)
      fail("entry '" + value + "' is not in lowest terms");
    m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), q);
  }
  if (!have_header)
    throw std::invalid_argument("matrix file: missing header");
  return m;
}

SparseMatrix parse_matrix(const std::string &text) {
  std::istringstream is(text);
  return read_matrix(is);
}

} // namespace kronspan
