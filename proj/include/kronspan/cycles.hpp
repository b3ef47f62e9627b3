#pragma once

#include "kronspan/permutation.hpp"

#include <string>
#include <vector>

namespace kronspan {

/// The cycle sending i -> i+1 -> ... -> i+k-1 -> i (k >= 1), or its inverse
/// when `ascending` is false. k = 1 gives the identity.
Permutation consecutive_cycle(int n, int start, int k, bool ascending);

/// All consecutive cycles of W_n, sorted, identity counted once.
std::vector<Permutation> consecutive_cycles(int n);

/// grid(n)[k-1][j-1] places value k in slot j and fills the other slots
/// with the remaining values in increasing order.
std::vector<std::vector<Permutation>> grid(int n);

/// Cycle label of grid entry (k, j): "(k,...,j)" above the diagonal,
/// "(k,k-1,...,j)" below it, "(1)" on it.
std::string grid_cycle_label(int k, int j);

/// Both tables as text: one-line words with the placed value in brackets,
/// then the cycle labels.
std::string format_grid(int n);

} // namespace kronspan
