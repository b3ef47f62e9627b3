#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kronspan {

/// Permutation of {1..n} in one-line notation: word()[i-1] = w(i).
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless word is a bijection of {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// The adjacent transposition s_i = (i, i+1), 1 <= i < n.
  static Permutation simple_reflection(int n, int i);
  /// Parses the space-separated one-line form, e.g. "2 1 4 3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> word() const { return word_; }
  bool is_identity() const;

  Permutation inverse() const;
  /// Space-separated one-line word.
  std::string to_string() const;
  /// Concatenated digits, e.g. "2143"; only meaningful for n <= 9.
  std::string compact() const;

  auto operator<=>(const Permutation &) const = default;
  bool operator==(const Permutation &) const = default;

private:
  std::vector<int> word_;
};

/// (u ∘ w)(i) = u(w(i)). Throws on size mismatch.
Permutation compose(const Permutation &u, const Permutation &w);
Permutation longest_element(int n);
/// Number of inversions.
int length(const Permutation &w);
/// Reverse of the one-line word, equal to compose(w, longest_element(n)).
Permutation reversed(const Permutation &w);
/// Embeds w ∈ W_m into W_n (n >= m) fixing m+1..n.
Permutation extend(const Permutation &w, int n);

/// Bruhat–Chevalley order via the rank-matrix (tableau) criterion.
bool bruhat_leq(const Permutation &y, const Permutation &w);

/// Longest increasing / decreasing subsequence length (patience sorting).
int lis(const Permutation &w);
int lds(const Permutation &w);

/// Indices i (1-based) with s_i w < w, i.e. value i+1 precedes value i.
std::vector<int> left_descents(const Permutation &w);
/// A reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.
std::vector<int> reduced_word(const Permutation &w);

/// Every permutation of {1..n} in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(int n);
unsigned long long factorial(int n);

/// Cycle notation with each cycle starting at its smallest element;
/// the identity prints as "(1)".
std::string cycle_notation(const Permutation &w);

} // namespace kronspan

template <> struct std::hash<kronspan::Permutation> {
  std::size_t operator()(const kronspan::Permutation &p) const noexcept;
};
