#pragma once

#include "kronspan/errors.hpp"
#include "kronspan/sparse.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kronspan {

/// Set partition of the 2r labels {1..r, 1'..r'}. Internally label k-1 is
/// the top vertex k and label r+k-1 the bottom vertex k'. Stored as a
/// restricted growth string, which is canonical.
class SetPartitionDiagram {
public:
  SetPartitionDiagram() = default;
  /// `block_of[label]` may use arbitrary block ids; they are renumbered.
  SetPartitionDiagram(int r, const std::vector<int> &block_of);
  /// Parses "{1,1'}{2,2'}". Every label must appear exactly once.
  static SetPartitionDiagram parse(std::string_view text, int r);

  /// {k, k'} for every k.
  static SetPartitionDiagram identity(int r);
  /// Place permutation swapping positions k and k+1.
  static SetPartitionDiagram transposition(int r, int k);
  /// {1}{1'} and {k, k'} for k >= 2.
  static SetPartitionDiagram p_one(int r);
  /// {1, 2, 1', 2'} and {k, k'} for k >= 3. Requires r >= 2.
  static SetPartitionDiagram p_three_halves(int r);

  int r() const { return r_; }
  const std::vector<int> &blocks() const { return rgs_; }
  int block_count() const;
  /// Blocks as sorted label lists, e.g. "{1,2,1'}{2'}".
  std::string to_string() const;

  auto operator<=>(const SetPartitionDiagram &) const = default;

private:
  int r_ = 0;
  std::vector<int> rgs_;
};

/// All Bell(2r) diagrams in lexicographic order of their growth strings.
std::vector<SetPartitionDiagram> enumerate_diagrams(int r);
unsigned long long bell_number(int m);

/// Psi(d): entry (i, j) is 1 iff the labeling k -> i_k, k' -> j_k is
/// constant on every block of d.
SparseMatrix diagram_action(const SetPartitionDiagram &d, int n);

/// 0/1 indicator matrices of the orbits of W_n acting diagonally on pairs of
/// index tuples, ordered by the smallest flat position of each orbit.
std::vector<SparseMatrix> orbit_commutant_basis(int n, int r);

/// Basis (row-major vectorized) of {X : X A = A X for every A in gens}.
std::vector<SparseVector> commutant_basis(const std::vector<SparseMatrix> &gens);

struct SchurWeylReport {
  int n = 0, r = 0;
  std::size_t diagram_count = 0;
  std::size_t psi_rank = 0;        // dim span{Psi(d)}
  std::size_t orbit_count = 0;     // dim End_{W_n}(V^{⊗r})
  std::size_t gamma_rank = 0;      // dim im(Phi)
  std::size_t linear_system_rank = 0; // dim of the image equation solution space
  std::size_t bicommutant_rank = 0;   // dim of the commutant of Psi(generators)
  bool commutant_equal = false;
  bool linear_system_equal = false;
  bool bicommutant_equal = false;
  bool passed() const { return commutant_equal && linear_system_equal && bicommutant_equal; }
};

/// Checks span{Psi(d)} = orbit commutant, and that both the linear-system
/// description and the commutant of Psi(generators) equal span{P(w)^{⊗r}}.
/// Throws VerificationError if any equality fails.
SchurWeylReport schur_weyl_check(int n, int r, const Budget &budget = {});

} // namespace kronspan
