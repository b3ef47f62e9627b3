#pragma once

#include "kronspan/laurent.hpp"
#include "kronspan/permutation.hpp"
#include "kronspan/tensor.hpp"

#include <map>
#include <string>

namespace kronspan {

/// Element sum a_w T_w of the Iwahori-Hecke algebra of W_n over Z[v, v^-1],
/// with (T_s + v^-1)(T_s - v) = 0.
class HeckeElement {
public:
  explicit HeckeElement(int n) : n_(n) {}

  static HeckeElement one(int n) { return basis(Permutation::identity(n)); }
  /// T_w.
  static HeckeElement basis(const Permutation &w);
  /// T_w^{-1}.
  static HeckeElement basis_inverse(const Permutation &w);

  int degree() const { return n_; }
  const std::map<Permutation, LaurentPolynomial> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPolynomial coefficient(const Permutation &w) const;
  void add(const Permutation &w, const LaurentPolynomial &c);

  /// Specialization v -> xi as an element of Q[W_n]; requires xi != 0.
  GroupAlgebraElement specialize(const Rational &xi) const;

  /// One "poly * T[word]" line per term, in permutation order.
  std::string to_string() const;

  HeckeElement &operator+=(const HeckeElement &other);
  HeckeElement &operator-=(const HeckeElement &other);
  HeckeElement &operator*=(const LaurentPolynomial &c);
  bool operator==(const HeckeElement &other) const = default;

private:
  void check_degree(const HeckeElement &other) const;

  int n_;
  std::map<Permutation, LaurentPolynomial> terms_;
};

HeckeElement operator+(HeckeElement a, const HeckeElement &b);
HeckeElement operator-(HeckeElement a, const HeckeElement &b);
HeckeElement operator*(const LaurentPolynomial &c, HeckeElement a);
/// Throws std::invalid_argument on mismatched n.
HeckeElement operator*(const HeckeElement &a, const HeckeElement &b);
HeckeElement multiply(const HeckeElement &a, const HeckeElement &b);

/// T_s h for s = s_i.
HeckeElement left_multiply_simple(int i, const HeckeElement &h);
/// h T_s for s = s_i.
HeckeElement right_multiply_simple(const HeckeElement &h, int i);

/// sum a_w T_w -> sum bar(a_w) T_{w^-1}^{-1}.
HeckeElement bar(const HeckeElement &h);
/// sum a_w T_w -> sum (-1)^{l(w)} bar(a_w) T_w.
HeckeElement jmap(const HeckeElement &h);
/// The automorphism with T_s -> -T_s^{-1}, so T_w -> (-1)^{l(w)} T_{w^-1}^{-1}.
HeckeElement dagger(const HeckeElement &h);

} // namespace kronspan
