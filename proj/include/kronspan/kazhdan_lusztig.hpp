#pragma once

#include "kronspan/hecke.hpp"
#include "kronspan/tableau.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace kronspan {

/// Kazhdan-Lusztig bases of the Hecke algebra of W_n, built by induction on
/// length and memoized.
class KazhdanLusztig {
public:
  explicit KazhdanLusztig(int n);

  int degree() const { return n_; }

  /// C'_w = T_w + sum_{y<w} p_{y,w} T_y with bar(C'_w) = C'_w.
  const HeckeElement &cprime(const Permutation &w);
  /// C_w = (-1)^{l(w)} jmap(C'_w).
  HeckeElement c(const Permutation &w);
  /// p_{y,w}: the T_y coefficient of C'_w (zero unless y <= w).
  LaurentPolynomial p(const Permutation &y, const Permutation &w);

  /// Coefficients of h in the C basis (or the C' basis), obtained by peeling
  /// off the longest remaining T_w.
  std::map<Permutation, LaurentPolynomial> expand_in_c(const HeckeElement &h);
  std::map<Permutation, LaurentPolynomial> expand_in_cprime(const HeckeElement &h);

private:
  int n_;
  std::recursive_mutex mutex_;
  std::map<Permutation, HeckeElement> cprime_;
};

/// Shape of the RSK tableaux of w.
Partition rsk_cell(const Permutation &w);
/// {w ∈ W_n : rsk_cell(w) = lam}.
std::vector<Permutation> cell_members(const Partition &lam);

} // namespace kronspan
