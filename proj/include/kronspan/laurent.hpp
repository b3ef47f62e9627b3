#pragma once

#include "kronspan/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace kronspan {

/// Element of Z[v, v^-1], stored as exponent -> nonzero coefficient.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long constant) : LaurentPolynomial(Integer(constant), 0) {}
  LaurentPolynomial(const Integer &coefficient, int exponent);

  /// c v^e.
  static LaurentPolynomial monomial(long coefficient, int exponent) {
    return LaurentPolynomial(Integer(coefficient), exponent);
  }
  /// Parses the text form written by to_string, e.g. "1*v^-1 + -2*v^3".
  static LaurentPolynomial parse(std::string_view text);

  const std::map<int, Integer> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const;
  /// Lowest and highest exponent; both 0 for the zero polynomial.
  int min_degree() const;
  int max_degree() const;

  /// v -> v^-1.
  LaurentPolynomial bar() const;
  Rational evaluate(const Rational &v) const;

  /// In v^-1 Z[v^-1] (every exponent negative).
  bool strictly_negative() const { return terms_.empty() || max_degree() < 0; }
  /// In v Z[v].
  bool strictly_positive() const { return terms_.empty() || min_degree() > 0; }

  /// "c*v^e" terms in increasing exponent joined by " + "; "0" when zero.
  std::string to_string() const;

  LaurentPolynomial &operator+=(const LaurentPolynomial &other);
  LaurentPolynomial &operator-=(const LaurentPolynomial &other);
  LaurentPolynomial &operator*=(const LaurentPolynomial &other);
  LaurentPolynomial operator-() const;
  bool operator==(const LaurentPolynomial &other) const = default;

private:
  std::map<int, Integer> terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b);
LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);

} // namespace kronspan
