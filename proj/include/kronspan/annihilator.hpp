#pragma once

#include "kronspan/errors.hpp"
#include "kronspan/kazhdan_lusztig.hpp"

#include <map>
#include <string>
#include <vector>

namespace kronspan {

/// U = {x ∈ W_n : RSK(x) does not dominate alpha(n, r)}.
std::vector<Permutation> annihilator_index_set(int n, int r);

struct AnnihilatorReport {
  int n = 0, r = 0;
  std::size_t set_size = 0;   // |U|
  std::size_t set_rank = 0;   // rank of {C_x|_{v=1} : x ∈ U}
  std::size_t kernel_dim = 0; // n! - span_rank(n, r)
  bool annihilates = false;   // Phi(C_x|_{v=1}) = 0 for every x ∈ U
  bool passed() const {
    return annihilates && set_rank == set_size && set_size == kernel_dim;
  }
};

/// Requires r < n - 1. Throws VerificationError when a clause fails.
AnnihilatorReport theorem2a_check(int n, int r, const Budget &budget = {});

struct QuotientReport {
  int n = 0, r = 0;
  std::vector<Permutation> complement; // W_n \ U
  std::size_t complement_rank = 0;     // rank of {Phi(x) : x ∉ U}
  std::size_t span_rank = 0;
  /// {T_w : w ∉ U} ∪ {C_x : x ∈ U} at v = 1 is a basis of Q[W_n].
  bool mixed_basis = false;
  bool matches_lis_basis = false; // complement = {w : lis(w) >= n - r}
  bool passed() const {
    return mixed_basis && matches_lis_basis && complement_rank == complement.size() &&
           complement_rank == span_rank;
  }
};

QuotientReport quotient_tbasis_check(int n, int r, const Budget &budget = {});

struct SpecializationResult {
  Rational xi;
  std::size_t module_dim = 0;      // dim of M = H x_alpha at v = xi
  std::size_t annihilator_dim = 0; // n! - rank of H -> End(M)
  std::size_t set_rank = 0;        // rank of {C_x|_{v=xi} : x ∈ U}
  bool passed(std::size_t set_size) const {
    return set_rank == set_size && annihilator_dim == set_size;
  }
};

struct SpecializationReport {
  int n = 0, r = 0;
  std::size_t set_size = 0;
  /// C_x T_w x_alpha = 0 over Z[v, v^-1] for all x ∈ U and w.
  bool annihilates_generic = false;
  std::vector<SpecializationResult> specializations;
  bool passed() const;
};

/// Annihilation over Z[v, v^-1], plus dimension counts at each xi.
SpecializationReport annihilator_specialization_check(int n, int r, const std::vector<Rational> &xis);

struct KlPropertyReport {
  int n = 0;
  std::size_t elements = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// For every w: bar(C'_w) = C'_w, C'_w - T_w ∈ H_{<0}, C_w - T_w ∈ H_{>0},
/// bar(C_w) = C_w, and every term of C'_w lies Bruhat-below w.
KlPropertyReport kl_property_check(int n);

/// Re-expands every T_w through the C' basis and back; true when the round
/// trip reproduces T_w and both transition matrices are unitriangular for
/// the Bruhat order.
bool unitriangularity_check(int n);

} // namespace kronspan
