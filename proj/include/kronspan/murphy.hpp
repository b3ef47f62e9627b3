#pragma once

#include "kronspan/hecke.hpp"
#include "kronspan/kazhdan_lusztig.hpp"
#include "kronspan/tableau.hpp"

#include <map>
#include <string>
#include <vector>

namespace kronspan {

/// Row stabilizer of t^lambda, in lexicographic order.
std::vector<Permutation> young_subgroup(const Partition &lam);
/// Longest element of young_subgroup(lam).
Permutation young_longest(const Partition &lam);

enum class MurphyKind { x, y };

/// x_lambda = sum v^{l(w)} T_w or y_lambda = sum (-v)^{-l(w)} T_w over W_lambda.
HeckeElement murphy_lambda(const Partition &lam, MurphyKind kind);
/// T_{d(s)} z_lambda T_{d(t)^-1}. Throws if s or t has another shape.
HeckeElement murphy(const Partition &lam, const StandardTableau &s, const StandardTableau &t,
                    MurphyKind kind);

/// Every x_st (or y_st) over all shapes of weight n.
std::vector<HeckeElement> murphy_basis(int n, MurphyKind kind);

/// T_{d(s)} C_{w_lambda} T_{d(t)^-1}.
HeckeElement geck_tilde_y(KazhdanLusztig &kl, const Partition &lam, const StandardTableau &s,
                          const StandardTableau &t);

struct Eq10Report {
  int n = 0;
  /// Observed sign per shape; absent when some pair matched neither sign.
  std::map<Partition, int> signs;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks geck_tilde_y(s, t) = eps_lambda v^{l(w_lambda)} y_st for one sign
/// per shape, over all shapes and tableau pairs of weight n.
Eq10Report eq10_check(int n);

struct GeckReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Expands each geck_tilde_y(s, t) in the C basis and checks: one member of
/// RSK-shape lam' with coefficient 1, other same-shape coefficients in
/// vZ[v], and every remaining term of RSK-shape strictly below lam'.
GeckReport geck_triangularity_check(int n);

} // namespace kronspan
