#include "kronspan/cycles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kronspan {

Permutation consecutive_cycle(int n, int start, int k, bool ascending) {
  if (k < 1 || start < 1 || start + k - 1 > n)
    throw std::invalid_argument("consecutive_cycle: interval out of range");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    w[static_cast<std::size_t>(i - 1)] = i;
  const int last = start + k - 1;
  for (int i = start; i <= last; ++i) {
    int image = ascending ? (i == last ? start : i + 1) : (i == start ? last : i - 1);
    w[static_cast<std::size_t>(i - 1)] = image;
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> consecutive_cycles(int n) {
  if (n < 1)
    throw std::invalid_argument("consecutive_cycles: n must be positive");
  std::set<Permutation> out;
  out.insert(Permutation::identity(n));
  for (int k = 2; k <= n; ++k)
    for (int start = 1; start + k - 1 <= n; ++start) {
      out.insert(consecutive_cycle(n, start, k, true));
      out.insert(consecutive_cycle(n, start, k, false));
    }
  return {out.begin(), out.end()};
}

std::vector<std::vector<Permutation>> grid(int n) {
  if (n < 1)
    throw std::invalid_argument("grid: n must be positive");
  std::vector<std::vector<Permutation>> g(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n; ++j) {
      std::vector<int> w;
      int next = 1;
      for (int slot = 1; slot <= n; ++slot) {
        if (slot == j) {
          w.push_back(k);
          continue;
        }
        if (next == k)
          ++next;
        w.push_back(next++);
      }
      g[static_cast<std::size_t>(k - 1)].emplace_back(std::move(w));
    }
  }
  return g;
}

std::string grid_cycle_label(int k, int j) {
  if (k == j)
    return "(1)";
  std::string s = "(";
  const int step = k < j ? 1 : -1;
  for (int x = k;; x += step) {
    s += std::to_string(x);
    if (x == j)
      break;
    s += ',';
  }
  return s + ")";
}

std::string format_grid(int n) {
  auto g = grid(n);
  std::vector<std::vector<std::string>> words(static_cast<std::size_t>(n)),
      labels(static_cast<std::size_t>(n));
  std::size_t wmax = 0, lmax = 0;
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j) {
      const auto &w = g[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
      std::string s;
      for (int slot = 1; slot <= n; ++slot) {
        if (slot > 1 && n > 9)
          s += ' ';
        if (slot == j)
          s += "[" + std::to_string(w(slot)) + "]";
        else
          s += std::to_string(w(slot));
      }
      wmax = std::max(wmax, s.size());
      words[static_cast<std::size_t>(k - 1)].push_back(std::move(s));
      std::string l = grid_cycle_label(k, j);
      lmax = std::max(lmax, l.size());
      labels[static_cast<std::size_t>(k - 1)].push_back(std::move(l));
    }
  auto table = [n](const std::vector<std::vector<std::string>> &cells, std::size_t width) {
    std::string out;
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        const auto &c = cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        out += c;
        if (j + 1 < n)
          out += std::string(width - c.size() + 2, ' ');
      }
      out += '\n';
    }
    return out;
  };
  return table(words, wmax) + "\n" + table(labels, lmax);
}

} // namespace kronspan
