#include "kronspan/hecke.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kronspan {

namespace {

// v - v^-1
const LaurentPolynomial &quadratic_shift() {
  static const LaurentPolynomial shift =
      LaurentPolynomial::monomial(1, 1) + LaurentPolynomial::monomial(-1, -1);
  return shift;
}

std::map<Permutation, HeckeElement> &inverse_cache() {
  static std::map<Permutation, HeckeElement> cache;
  return cache;
}

std::mutex &inverse_mutex() {
  static std::mutex m;
  return m;
}

} // namespace

HeckeElement HeckeElement::basis(const Permutation &w) {
  HeckeElement h(w.size());
  h.add(w, 1);
  return h;
}

HeckeElement HeckeElement::basis_inverse(const Permutation &w) {
  {
    std::lock_guard lock(inverse_mutex());
    auto it = inverse_cache().find(w);
    if (it != inverse_cache().end())
      return it->second;
  }
  // w = s_1 ... s_k gives T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1}, with
  // T_s^{-1} = T_s - (v - v^-1).
  const int n = w.size();
  HeckeElement out = one(n);
  for (int i : reduced_word(w)) {
    HeckeElement next = left_multiply_simple(i, out);
    next -= quadratic_shift() * out;
    out = std::move(next);
  }
  std::lock_guard lock(inverse_mutex());
  inverse_cache().emplace(w, out);
  return out;
}

LaurentPolynomial HeckeElement::coefficient(const Permutation &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void HeckeElement::add(const Permutation &w, const LaurentPolynomial &c) {
  if (w.size() != n_)
    throw std::invalid_argument("hecke: permutation of wrong size");
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

GroupAlgebraElement HeckeElement::specialize(const Rational &xi) const {
  if (xi == 0)
    throw std::invalid_argument("hecke: specialization requires an invertible value");
  GroupAlgebraElement out(n_);
  for (const auto &[w, c] : terms_)
    out.add(w, c.evaluate(xi));
  return out;
}

std::string HeckeElement::to_string() const {
  std::ostringstream out;
  for (const auto &[w, c] : terms_)
    out << c.to_string() << " * T[" << w.to_string() << "]\n";
  return out.str();
}

void HeckeElement::check_degree(const HeckeElement &other) const {
  if (other.n_ != n_)
    throw std::invalid_argument("hecke: elements of different rank");
}

HeckeElement &HeckeElement::operator+=(const HeckeElement &other) {
  check_degree(other);
  for (const auto &[w, c] : other.terms_)
    add(w, c);
  return *this;
}

HeckeElement &HeckeElement::operator-=(const HeckeElement &other) {
  check_degree(other);
  for (const auto &[w, c] : other.terms_)
    add(w, -c);
  return *this;
}

HeckeElement &HeckeElement::operator*=(const LaurentPolynomial &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[w, a] : terms_)
    a *= c;
  return *this;
}

HeckeElement operator+(HeckeElement a, const HeckeElement &b) { return a += b; }

HeckeElement operator-(HeckeElement a, const HeckeElement &b) { return a -= b; }

HeckeElement operator*(const LaurentPolynomial &c, HeckeElement a) { return a *= c; }

HeckeElement left_multiply_simple(int i, const HeckeElement &h) {
  const int n = h.degree();
  const auto s = Permutation::simple_reflection(n, i);
  HeckeElement out(n);
  for (const auto &[w, c] : h.terms()) {
    // l(sw) < l(w) iff value i+1 comes before value i in w.
    auto inv = w.inverse();
    out.add(compose(s, w), c);
    if (inv(i) > inv(i + 1))
      out.add(w, quadratic_shift() * c);
  }
  return out;
}

HeckeElement right_multiply_simple(const HeckeElement &h, int i) {
  const int n = h.degree();
  const auto s = Permutation::simple_reflection(n, i);
  HeckeElement out(n);
  for (const auto &[w, c] : h.terms()) {
    out.add(compose(w, s), c);
    if (w(i) > w(i + 1))
      out.add(w, quadratic_shift() * c);
  }
  return out;
}

HeckeElement operator*(const HeckeElement &a, const HeckeElement &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("hecke: elements of different rank");
  HeckeElement out(a.degree());
  for (const auto &[u, c] : a.terms()) {
    auto word = reduced_word(u);
    HeckeElement term = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      term = left_multiply_simple(*it, term);
    out += c * term;
  }
  return out;
}

HeckeElement multiply(const HeckeElement &a, const HeckeElement &b) { return a * b; }

HeckeElement bar(const HeckeElement &h) {
  HeckeElement out(h.degree());
  for (const auto &[w, c] : h.terms())
    out += c.bar() * HeckeElement::basis_inverse(w.inverse());
  return out;
}

HeckeElement jmap(const HeckeElement &h) {
  HeckeElement out(h.degree());
  for (const auto &[w, c] : h.terms())
    out.add(w, length(w) % 2 == 0 ? c.bar() : -c.bar());
  return out;
}

HeckeElement dagger(const HeckeElement &h) {
  HeckeElement out(h.degree());
  for (const auto &[w, c] : h.terms()) {
    LaurentPolynomial sign = length(w) % 2 == 0 ? 1 : -1;
    out += (sign * c) * HeckeElement::basis_inverse(w.inverse());
  }
  return out;
}

} // namespace kronspan
