#pragma once

#include <stdexcept>
#include <string>

namespace kronspan {

/// Raised when a computed identity that must hold exactly does not.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an instance is larger than the configured resource budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Work limits for the exhaustive computations. `max_cells` bounds
/// n^{2r} * n!, the size of the vectorized Kronecker-power family.
struct Budget {
  unsigned long long max_cells = 2'000'000ULL;
  unsigned long long max_permutations = 5040ULL;

  void require_cells(unsigned long long cells, const std::string &what) const;
  void require_permutations(unsigned long long count,
                            const std::string &what) const;
};

} // namespace kronspan
