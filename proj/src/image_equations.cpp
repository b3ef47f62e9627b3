#include "kronspan/linalg.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

#include <stdexcept>
#include <utility>

namespace kronspan {

namespace {

std::size_t encode(const std::vector<int> &tuple, int n) { return flat_index(tuple, n); }

} // namespace

std::vector<SparseVector> image_equations(int n, int r, unsigned conditions) {
  if (n < 1 || r < 0)
    throw std::invalid_argument("image_equations: need n >= 1 and r >= 0");
  const std::size_t side = ipow(static_cast<std::size_t>(n), r);
  const std::size_t unknowns = side * side;
  std::vector<SparseVector> rows;
  const Rational one(1), minus_one(-1);

  if ((conditions & place_symmetry) && r >= 2) {
    for (std::size_t flat_i = 0; flat_i < side; ++flat_i) {
      auto ti = index_tuple(flat_i, n, r);
      for (std::size_t flat_j = 0; flat_j < side; ++flat_j) {
        auto tj = index_tuple(flat_j, n, r);
        for (int k = 0; k + 1 < r; ++k) {
          auto si = ti, sj = tj;
          std::swap(si[k], si[k + 1]);
          std::swap(sj[k], sj[k + 1]);
          std::size_t a = flat_i * side + flat_j;
          std::size_t b = encode(si, n) * side + encode(sj, n);
          if (a < b)
            rows.emplace_back(unknowns, std::vector<SparseVector::Entry>{{a, one}, {b, minus_one}});
        }
      }
    }
  }

  if ((conditions & pair_pattern) && r >= 2) {
    for (std::size_t flat_i = 0; flat_i < side; ++flat_i) {
      auto ti = index_tuple(flat_i, n, r);
      for (std::size_t flat_j = 0; flat_j < side; ++flat_j) {
        auto tj = index_tuple(flat_j, n, r);
        if ((ti[0] == ti[1]) != (tj[0] == tj[1]))
          rows.emplace_back(unknowns,
                            std::vector<SparseVector::Entry>{{flat_i * side + flat_j, one}});
      }
    }
  }

  if ((conditions & marginal_balance) && r >= 1) {
    // For each (i1, j1, rest_i, rest_j):
    //   sum_a x[(a, rest_i), (j1, rest_j)] = sum_b x[(i1, rest_i), (b, rest_j)].
    const std::size_t rest = side / static_cast<std::size_t>(n);
    for (int i1 = 1; i1 <= n; ++i1)
      for (int j1 = 1; j1 <= n; ++j1)
        for (std::size_t ri = 0; ri < rest; ++ri)
          for (std::size_t rj = 0; rj < rest; ++rj) {
            std::vector<SparseVector::Entry> entries;
            entries.reserve(2 * static_cast<std::size_t>(n));
            for (int a = 1; a <= n; ++a) {
              std::size_t row = static_cast<std::size_t>(a - 1) * rest + ri;
              std::size_t col = static_cast<std::size_t>(j1 - 1) * rest + rj;
              entries.emplace_back(row * side + col, one);
            }
            for (int b = 1; b <= n; ++b) {
              std::size_t row = static_cast<std::size_t>(i1 - 1) * rest + ri;
              std::size_t col = static_cast<std::size_t>(b - 1) * rest + rj;
              entries.emplace_back(row * side + col, minus_one);
            }
            SparseVector v(unknowns, std::move(entries));
            if (!v.is_zero())
              rows.push_back(std::move(v));
          }
  }
  return rows;
}

std::vector<SparseVector> section5_solution_space(int n, int r, const Budget &budget,
                                                  bool verify) {
  const std::size_t side = ipow(static_cast<std::size_t>(n), r);
  budget.require_cells(static_cast<unsigned long long>(side) * side * static_cast<unsigned>(n),
                       "section5_solution_space");
  auto rows = image_equations(n, r);
  auto kernel = kernel_basis(rows, side * side);
  if (verify) {
    budget.require_permutations(factorial(n), "section5_solution_space");
    std::vector<SparseVector> gamma;
    for (const auto &w : all_permutations(n))
      gamma.push_back(kron_power_vector(w, r));
    if (!subspace_equal(kernel, gamma))
      throw VerificationError("solution space of the linear system differs from span "
                              "of Kronecker powers at n=" +
                              std::to_string(n) + ", r=" + std::to_string(r));
  }
  return kernel;
}

} // namespace kronspan
