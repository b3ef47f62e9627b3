#include "kronspan/kazhdan_lusztig.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronspan {

namespace {

// Permutations in the support ordered by decreasing length, ties broken by
// the word.
std::vector<Permutation> by_decreasing_length(const HeckeElement &h) {
  std::vector<std::pair<int, Permutation>> keyed;
  for (const auto &[w, c] : h.terms())
    keyed.emplace_back(length(w), w);
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<Permutation> out;
  for (auto &[l, w] : keyed)
    out.push_back(w);
  return out;
}

// The bar-invariant element c_0 + sum_{e>0} c_e (v^e + v^-e) matching the
// nonnegative-degree part of p.
LaurentPolynomial bar_invariant_part(const LaurentPolynomial &p) {
  LaurentPolynomial m;
  for (const auto &[e, c] : p.terms()) {
    if (e < 0)
      continue;
    m += LaurentPolynomial(c, e);
    if (e > 0)
      m += LaurentPolynomial(c, -e);
  }
  return m;
}

} // namespace

KazhdanLusztig::KazhdanLusztig(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("kazhdan-lusztig: n must be positive");
}

const HeckeElement &KazhdanLusztig::cprime(const Permutation &w) {
  std::lock_guard lock(mutex_);
  if (w.size() != n_)
    throw std::invalid_argument("kazhdan-lusztig: permutation of wrong size");
  if (auto it = cprime_.find(w); it != cprime_.end())
    return it->second;
  if (w.is_identity())
    return cprime_.emplace(w, HeckeElement::one(n_)).first->second;

  // w = s y with l(y) = l(w) - 1; C'_s C'_y = C'_w + lower C' terms.
  const int i = left_descents(w).front();
  const auto s = Permutation::simple_reflection(n_, i);
  const auto y = compose(s, w);
  const HeckeElement &cy = cprime(y);
  HeckeElement h = left_multiply_simple(i, cy);
  h += LaurentPolynomial::monomial(1, -1) * cy;
  for (const auto &z : by_decreasing_length(h)) {
    if (z == w)
      continue;
    auto m = bar_invariant_part(h.coefficient(z));
    if (!m.is_zero())
      h -= m * cprime(z);
  }
  if (h.coefficient(w) != LaurentPolynomial(1))
    throw std::logic_error("kazhdan-lusztig: leading coefficient is not 1");
  return cprime_.emplace(w, std::move(h)).first->second;
}

HeckeElement KazhdanLusztig::c(const Permutation &w) {
  HeckeElement out = jmap(cprime(w));
  if (length(w) % 2 != 0)
    out *= LaurentPolynomial(-1);
  return out;
}

LaurentPolynomial KazhdanLusztig::p(const Permutation &y, const Permutation &w) {
  return cprime(w).coefficient(y);
}

std::map<Permutation, LaurentPolynomial> KazhdanLusztig::expand_in_c(const HeckeElement &h) {
  std::map<Permutation, LaurentPolynomial> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    const auto w = by_decreasing_length(rest).front();
    const auto a = rest.coefficient(w);
    rest -= a * c(w);
    out.emplace(w, a);
  }
  return out;
}

std::map<Permutation, LaurentPolynomial>
KazhdanLusztig::expand_in_cprime(const HeckeElement &h) {
  std::map<Permutation, LaurentPolynomial> out;
  HeckeElement rest = h;
  while (!rest.is_zero()) {
    const auto w = by_decreasing_length(rest).front();
    const auto a = rest.coefficient(w);
    rest -= a * cprime(w);
    out.emplace(w, a);
  }
  return out;
}

Partition rsk_cell(const Permutation &w) { return rsk(w).shape; }

std::vector<Permutation> cell_members(const Partition &lam) {
  std::vector<Permutation> out;
  for (const auto &w : all_permutations(lam.weight()))
    if (rsk_cell(w) == lam)
      out.push_back(w);
  return out;
}

} // namespace kronspan
