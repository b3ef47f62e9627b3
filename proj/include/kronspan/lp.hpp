#pragma once

#include "kronspan/sparse.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace kronspan {

struct FeasiblePoint {
  std::vector<Rational> x;
};

/// y with y^T A <= 0 on nonnegative columns, y^T A = 0 on free columns and
/// y^T b > 0. Any such y proves {A x = b, x_nonneg >= 0} empty.
struct FarkasCertificate {
  std::vector<Rational> y;
};

using LpCertificate = std::variant<FeasiblePoint, FarkasCertificate>;

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;
  Rational value;
  std::optional<FarkasCertificate> farkas;
};

/// Exact phase-I simplex on {A x = b, x_j >= 0 for nonneg[j]}.
LpCertificate lp_feasible(const SparseMatrix &a, std::span<const Rational> b,
                          const std::vector<bool> &nonneg);

/// Maximizes objective^T x over the same region (phase I then phase II).
LpSolution lp_maximize(const SparseMatrix &a, std::span<const Rational> b,
                       const std::vector<bool> &nonneg,
                       std::span<const Rational> objective);

bool verify_point(const SparseMatrix &a, std::span<const Rational> b,
                  const std::vector<bool> &nonneg, std::span<const Rational> x);
bool verify_farkas(const SparseMatrix &a, std::span<const Rational> b,
                   const std::vector<bool> &nonneg, std::span<const Rational> y);

} // namespace kronspan
