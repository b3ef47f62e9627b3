#pragma once

#include "kronspan/permutation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kronspan {

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);
  /// Comma-separated parts, e.g. "2,1,1".
  static Partition parse(std::string_view text);

  const std::vector<int> &parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// parts()[i - 1], or 0 past the last part.
  int part(int i) const;
  Partition transpose() const;
  std::string to_string() const;

  auto operator<=>(const Partition &) const = default;

private:
  std::vector<int> parts_;
};

/// Dominance order: prefix sums of lam bound those of mu. Throws on unequal
/// weights.
bool dominates(const Partition &lam, const Partition &mu);
/// The hook shape (n - r, 1^r). Requires 0 <= r < n.
Partition alpha(int n, int r);
/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// f^lambda by the hook length formula.
unsigned long long hook_length_count(const Partition &lam);

/// Standard Young tableau: rows()[i][j] is the entry in row i, column j.
class StandardTableau {
public:
  StandardTableau() = default;
  /// Throws std::invalid_argument unless the filling is standard.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  /// Row-reading filling t^lambda with 1..n in natural order.
  static StandardTableau row_reading(const Partition &shape);

  const std::vector<std::vector<int>> &rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  std::string to_string() const;

  auto operator<=>(const StandardTableau &) const = default;

private:
  std::vector<std::vector<int>> rows_;
};

std::vector<StandardTableau> enumerate_tableaux(const Partition &lam);

/// Entrywise action (w t)(box) = w(t(box)); the result need not be standard.
std::vector<std::vector<int>> act(const Permutation &w, const StandardTableau &t);
/// d(t): the distinguished (minimal length) representative of its coset
/// d W_lambda carrying t^lambda to t, d(t)(t^lambda(b)) = t(b) for every box.
Permutation tableau_perm(const StandardTableau &t);

struct RskResult {
  StandardTableau insertion; // P
  StandardTableau recording; // Q
  Partition shape;
};

/// Row insertion of w(1), ..., w(n).
RskResult rsk(const Permutation &w);
/// Inverse of rsk on same-shape pairs. Throws on shape mismatch.
Permutation rsk_inverse(const StandardTableau &insertion,
                        const StandardTableau &recording);

} // namespace kronspan
