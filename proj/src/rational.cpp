#include "kronspan/rational.hpp"
#include "kronspan/errors.hpp"

#include <stdexcept>

namespace kronspan {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer n{std::string(num[0] == '+' ? num.substr(1) : num)};
  Integer d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_fraction(const Rational &value) {
  Rational q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_compact(const Rational &value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return to_fraction(q);
}

void Budget::require_cells(unsigned long long cells, const std::string &what) const {
  if (cells > max_cells)
    throw BudgetExceeded(what + ": " + std::to_string(cells) +
                         " cells exceeds budget of " + std::to_string(max_cells));
}

void Budget::require_permutations(unsigned long long count,
                                  const std::string &what) const {
  if (count > max_permutations)
    throw BudgetExceeded(what + ": " + std::to_string(count) +
                         " permutations exceeds budget of " +
                         std::to_string(max_permutations));
}

} // namespace kronspan
