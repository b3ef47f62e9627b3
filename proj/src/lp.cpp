#include "kronspan/lp.hpp"

#include <stdexcept>

namespace kronspan {

namespace {

/// Dense simplex tableau for min c^T z, T z = rhs, z >= 0. Columns
/// [0, structural) are the split problem variables, the remaining m columns
/// are artificials.
class Tableau {
public:
  Tableau(const SparseMatrix &a, std::span<const Rational> b,
          const std::vector<bool> &nonneg)
      : m_(a.rows()), n_orig_(a.cols()) {
    if (b.size() != a.rows() || nonneg.size() != a.cols())
      throw std::invalid_argument("lp: inconsistent problem dimensions");
    // Free variables become a difference of two nonnegative columns.
    for (std::size_t j = 0; j < n_orig_; ++j) {
      plus_col_.push_back(structural_++);
      minus_col_.push_back(nonneg[j] ? npos : structural_++);
    }
    width_ = structural_ + m_;
    t_.assign(m_, std::vector<Rational>(width_));
    rhs_.assign(m_, Rational(0));
    sign_.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i)
      if (b[i] < 0)
        sign_[i] = -1;
    for (const auto &[k, v] : a.entries()) {
      Rational s = sign_[k.first] * v;
      t_[k.first][plus_col_[k.second]] = s;
      if (minus_col_[k.second] != npos)
        t_[k.first][minus_col_[k.second]] = -s;
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      rhs_[i] = sign_[i] * b[i];
      t_[i][structural_ + i] = 1;
      basis_[i] = structural_ + i;
    }
    active_.assign(m_, true);
    allowed_.assign(width_, true);
  }

  /// Phase I. Returns the optimal sum of artificials.
  Rational phase_one() {
    cost_.assign(width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      cost_[structural_ + i] = 1;
    recompute_reduced_costs();
    if (run() != LpStatus::optimal)
      throw std::logic_error("lp: phase I cannot be unbounded");
    return objective();
  }

  /// Phase I duals in the caller's row orientation.
  std::vector<Rational> farkas_vector() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i)
      y[i] = sign_[i] * (1 - reduced_[structural_ + i]);
    return y;
  }

  /// Pivots zero-level artificials out of the basis (or retires their rows
  /// as redundant) and forbids artificials from re-entering.
  void drop_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < structural_)
        continue;
      std::size_t enter = npos;
      for (std::size_t j = 0; j < structural_; ++j)
        if (t_[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter == npos)
        active_[i] = false;
      else
        pivot(i, enter);
    }
    for (std::size_t j = structural_; j < width_; ++j)
      allowed_[j] = false;
  }

  /// Phase II: minimize over the split variables with costs derived from
  /// the original objective.
  LpStatus phase_two(std::span<const Rational> maximize) {
    cost_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < n_orig_; ++j) {
      cost_[plus_col_[j]] = -maximize[j];
      if (minus_col_[j] != npos)
        cost_[minus_col_[j]] = maximize[j];
    }
    recompute_reduced_costs();
    return run();
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> z(width_);
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i])
        z[basis_[i]] = rhs_[i];
    std::vector<Rational> x(n_orig_);
    for (std::size_t j = 0; j < n_orig_; ++j) {
      x[j] = z[plus_col_[j]];
      if (minus_col_[j] != npos)
        x[j] -= z[minus_col_[j]];
    }
    return x;
  }

  Rational objective() const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i])
        v += cost_[basis_[i]] * rhs_[i];
    return v;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void recompute_reduced_costs() {
    reduced_ = cost_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i])
        continue;
      const Rational &cb = cost_[basis_[i]];
      if (cb == 0)
        continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (t_[i][j] != 0)
          reduced_[j] -= cb * t_[i][j];
    }
  }

  // Bland's rule: lowest-index improving column, lowest-index basic
  // variable among tied ratios.
  LpStatus run() {
    while (true) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < width_; ++j)
        if (allowed_[j] && reduced_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == npos)
        return LpStatus::optimal;
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || t_[i][enter] <= 0)
          continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == npos || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos)
        return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    std::vector<Rational> &pr = t_[row];
    Rational inv = 1 / pr[col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width_; ++j)
      if (pr[j] != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || !active_[i] || t_[i][col] == 0)
        continue;
      Rational f = t_[i][col];
      for (auto j : nz)
        t_[i][j] -= f * pr[j];
      rhs_[i] -= f * rhs_[row];
    }
    if (reduced_[col] != 0) {
      Rational f = reduced_[col];
      for (auto j : nz)
        reduced_[j] -= f * pr[j];
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_orig_;
  std::size_t structural_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> plus_col_, minus_col_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  std::vector<bool> allowed_;
  std::vector<Rational> cost_, reduced_;
};

} // namespace

LpCertificate lp_feasible(const SparseMatrix &a, std::span<const Rational> b,
                          const std::vector<bool> &nonneg) {
  Tableau tab(a, b, nonneg);
  if (tab.phase_one() > 0) {
    FarkasCertificate cert{tab.farkas_vector()};
    if (!verify_farkas(a, b, nonneg, cert.y))
      throw std::logic_error("lp: Farkas certificate failed verification");
    return cert;
  }
  FeasiblePoint p{tab.solution()};
  if (!verify_point(a, b, nonneg, p.x))
    throw std::logic_error("lp: feasible point failed verification");
  return p;
}

LpSolution lp_maximize(const SparseMatrix &a, std::span<const Rational> b,
                       const std::vector<bool> &nonneg,
                       std::span<const Rational> objective) {
  if (objective.size() != a.cols())
    throw std::invalid_argument("lp: objective length mismatch");
  Tableau tab(a, b, nonneg);
  LpSolution out;
  if (tab.phase_one() > 0) {
    out.status = LpStatus::infeasible;
    out.farkas = FarkasCertificate{tab.farkas_vector()};
    return out;
  }
  tab.drop_artificials();
  out.status = tab.phase_two(objective);
  if (out.status == LpStatus::optimal) {
    out.x = tab.solution();
    if (!verify_point(a, b, nonneg, out.x))
      throw std::logic_error("lp: optimum failed verification");
    out.value = 0;
    for (std::size_t j = 0; j < out.x.size(); ++j)
      out.value += objective[j] * out.x[j];
  }
  return out;
}

bool verify_point(const SparseMatrix &a, std::span<const Rational> b,
                  const std::vector<bool> &nonneg, std::span<const Rational> x) {
  if (x.size() != a.cols() || b.size() != a.rows())
    return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (nonneg[j] && x[j] < 0)
      return false;
  std::vector<Rational> ax(a.rows());
  for (const auto &[k, v] : a.entries())
    ax[k.first] += v * x[k.second];
  for (std::size_t i = 0; i < ax.size(); ++i)
    if (ax[i] != b[i])
      return false;
  return true;
}

bool verify_farkas(const SparseMatrix &a, std::span<const Rational> b,
                   const std::vector<bool> &nonneg, std::span<const Rational> y) {
  if (y.size() != a.rows() || b.size() != a.rows())
    return false;
  std::vector<Rational> yta(a.cols());
  for (const auto &[k, v] : a.entries())
    yta[k.second] += y[k.first] * v;
  for (std::size_t j = 0; j < yta.size(); ++j) {
    if (nonneg[j] ? yta[j] > 0 : yta[j] != 0)
      return false;
  }
  Rational ytb = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    ytb += y[i] * b[i];
  return ytb > 0;
}

} // namespace kronspan
