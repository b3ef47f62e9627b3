#include "kronspan/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kronspan {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  if (n == 0)
    throw std::invalid_argument("permutation must have n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw std::invalid_argument("identity: n must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::simple_reflection(int n, int i) {
  if (i < 1 || i >= n)
    throw std::invalid_argument("simple reflection index out of range");
  Permutation s = identity(n);
  std::swap(s.word_[static_cast<std::size_t>(i - 1)], s.word_[static_cast<std::size_t>(i)]);
  return s;
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> w;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size())
      throw std::invalid_argument("bad permutation token '" + tok + "'");
    w.push_back(v);
  }
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i)
    if (word_[i] != static_cast<int>(i) + 1)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i)
    inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation p;
  p.word_ = std::move(inv);
  return p;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i)
      s += ' ';
    s += std::to_string(word_[i]);
  }
  return s;
}

std::string Permutation::compact() const {
  std::string s;
  for (int v : word_)
    s += std::to_string(v);
  return s;
}

Permutation compose(const Permutation &u, const Permutation &w) {
  if (u.size() != w.size())
    throw std::invalid_argument("compose: permutations of different sizes");
  std::vector<int> out(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i)
    out[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Permutation(std::move(out));
}

Permutation longest_element(int n) {
  if (n < 1)
    throw std::invalid_argument("longest_element: n must be positive");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

int length(const Permutation &w) {
  int inv = 0;
  auto word = w.word();
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j])
        ++inv;
  return inv;
}

Permutation reversed(const Permutation &w) {
  std::vector<int> r(w.word().rbegin(), w.word().rend());
  return Permutation(std::move(r));
}

Permutation extend(const Permutation &w, int n) {
  if (n < w.size())
    throw std::invalid_argument("extend: target size smaller than permutation");
  std::vector<int> out(w.word().begin(), w.word().end());
  for (int i = w.size() + 1; i <= n; ++i)
    out.push_back(i);
  return Permutation(std::move(out));
}

bool bruhat_leq(const Permutation &y, const Permutation &w) {
  if (y.size() != w.size())
    throw std::invalid_argument("bruhat_leq: permutations of different sizes");
  const int n = w.size();
  // y <= w iff #{a <= i : y(a) >= k} <= #{a <= i : w(a) >= k} for all i, k.
  std::vector<int> cy(static_cast<std::size_t>(n) + 2, 0), cw(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= y(i); ++k)
      ++cy[static_cast<std::size_t>(k)];
    for (int k = 1; k <= w(i); ++k)
      ++cw[static_cast<std::size_t>(k)];
    for (int k = 1; k <= n; ++k)
      if (cy[static_cast<std::size_t>(k)] > cw[static_cast<std::size_t>(k)])
        return false;
  }
  return true;
}

namespace {

int patience(std::span<const int> word, bool increasing) {
  std::vector<int> tops;
  for (int v : word) {
    int key = increasing ? v : -v;
    auto it = std::lower_bound(tops.begin(), tops.end(), key);
    if (it == tops.end())
      tops.push_back(key);
    else
      *it = key;
  }
  return static_cast<int>(tops.size());
}

} // namespace

int lis(const Permutation &w) { return patience(w.word(), true); }
int lds(const Permutation &w) { return patience(w.word(), false); }

std::vector<int> left_descents(const Permutation &w) {
  auto inv = w.inverse();
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i)
    if (inv(i) > inv(i + 1))
      out.push_back(i);
  return out;
}

std::vector<int> reduced_word(const Permutation &w) {
  std::vector<int> word;
  Permutation cur = w;
  while (!cur.is_identity()) {
    int s = left_descents(cur).front();
    word.push_back(s);
    cur = compose(Permutation::simple_reflection(cur.size(), s), cur);
  }
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<unsigned long long>(i);
  return f;
}

std::string cycle_notation(const Permutation &w) {
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  std::string out;
  for (int start = 1; start <= w.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || w(start) == start)
      continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first)
        out += ',';
      out += std::to_string(x);
      seen[static_cast<std::size_t>(x)] = true;
      x = w(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "(1)" : out;
}

} // namespace kronspan

std::size_t std::hash<kronspan::Permutation>::operator()(
    const kronspan::Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.word())
    h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
  return h;
}
