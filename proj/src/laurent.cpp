#include "kronspan/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kronspan {

LaurentPolynomial::LaurentPolynomial(const Integer &coefficient, int exponent) {
  if (coefficient != 0)
    terms_.emplace(exponent, coefficient);
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  LaurentPolynomial out;
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos)
    throw std::invalid_argument("laurent: empty text");
  if (s == "0")
    return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto star = term.find("*v^");
    if (star == std::string::npos)
      throw std::invalid_argument("laurent: malformed term '" + term + "'");
    Integer c;
    int e = 0;
    try {
      c = Integer(term.substr(0, star));
      std::size_t used = 0;
      std::string exp = term.substr(star + 3);
      e = std::stoi(exp, &used);
      if (used != exp.size())
        throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw std::invalid_argument("laurent: malformed term '" + term + "'");
    }
    out += LaurentPolynomial(c, e);
    if (next == std::string::npos)
      break;
    pos = next + 3;
  }
  return out;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPolynomial::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentPolynomial::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPolynomial LaurentPolynomial::bar() const {
  LaurentPolynomial out;
  for (const auto &[e, c] : terms_)
    out.terms_.emplace(-e, c);
  return out;
}

Rational LaurentPolynomial::evaluate(const Rational &v) const {
  if (v == 0 && !terms_.empty() && min_degree() < 0)
    throw std::domain_error("laurent: evaluation at 0 with negative exponents");
  Rational total;
  for (const auto &[e, c] : terms_) {
    Rational power(1);
    Rational base = e < 0 ? Rational(1) / v : v;
    for (int k = 0; k < (e < 0 ? -e : e); ++k)
      power *= base;
    total += Rational(c) * power;
  }
  return total;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    out << (first ? "" : " + ") << c.get_str() << "*v^" << e;
    first = false;
  }
  return out.str();
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &other) {
  for (const auto &[e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &other) {
  return *this += -other;
}

LaurentPolynomial &LaurentPolynomial::operator*=(const LaurentPolynomial &other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto &[e, c] : out.terms_)
    c = -c;
  return out;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }

LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
  LaurentPolynomial out;
  for (const auto &[ea, ca] : a.terms())
    for (const auto &[eb, cb] : b.terms())
      out += LaurentPolynomial(Integer(ca * cb), ea + eb);
  return out;
}

} // namespace kronspan
