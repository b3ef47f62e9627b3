#pragma once

#include "kronspan/errors.hpp"
#include "kronspan/permutation.hpp"
#include "kronspan/sparse.hpp"

#include <map>
#include <span>
#include <vector>

namespace kronspan {

/// n^r, throwing std::overflow_error past 2^62.
std::size_t ipow(std::size_t base, int exp);

/// Flat index of (i_1, ..., i_r), entries 1-based: sum (i_k - 1) n^{r-k}.
std::size_t flat_index(std::span<const int> tuple, int n);
std::vector<int> index_tuple(std::size_t flat, int n, int r);

/// Row index of P(w)^{⊗r} holding the 1 of column `col`.
std::size_t image_index(const Permutation &w, std::size_t col, int r);

/// P(w)^{⊗r}: column (j_1..j_r) has its single 1 in row (w(j_1)..w(j_r)).
/// Rows and columns are ordered lexicographically on tuples.
SparseMatrix kron_power(const Permutation &w, int r);

/// Row-major vectorization of kron_power(w, r), built directly from the
/// n^r nonzero positions.
SparseVector kron_power_vector(const Permutation &w, int r);

/// Finitely supported element sum a_w w of Q[W_n].
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  static GroupAlgebraElement basis_element(const Permutation &w);
  /// (1/n!) sum over W_n.
  static GroupAlgebraElement uniform_average(int n);

  int degree() const { return n_; }
  const std::map<Permutation, Rational> &terms() const { return terms_; }
  Rational coefficient(const Permutation &w) const;
  void add(const Permutation &w, const Rational &c);

private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

/// sum a_w P(w)^{⊗r}.
SparseMatrix phi(const GroupAlgebraElement &a, int r);

enum class Direction { increasing, decreasing };

/// Exact rank of {vec P(w)^{⊗r} : w ∈ W_n}.
std::size_t span_rank(int n, int r, const Budget &budget = {});
/// sum over lambda ⊢ n with lambda_1 >= n - r of (f^lambda)^2.
unsigned long long rsk_count(int n, int r);
/// n! - span_rank(n, r).
std::size_t kernel_dim(int n, int r, const Budget &budget = {});

/// Summary of the exact checks behind a basis claim.
struct BasisReport {
  std::vector<Permutation> basis;
  std::size_t basis_rank = 0; // rank of the chosen subset
  std::size_t span_rank = 0;  // rank of the full family
};

/// {w : IS(w) >= n - r} (or DS). Verifies the Kronecker powers are
/// independent and span; throws VerificationError otherwise.
BasisReport theorem1_basis(int n, int r, Direction direction,
                           const Budget &budget = {});

/// {w ∈ W_{n-1} : IS(w) >= n - 1 - r}, embedded in W_n, verified against the
/// span of {P(w)^{⊗r} : w ∈ W_{n-1}}.
BasisReport remark4_basis(int n, int r, const Budget &budget = {});

/// Independence and span of {P(w)^{⊗r} : w ∈ subset} inside the span of
/// the same family over `family`.
BasisReport verify_basis(std::vector<Permutation> subset,
                         std::span<const Permutation> family, int r);

} // namespace kronspan
