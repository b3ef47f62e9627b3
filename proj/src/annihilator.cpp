#include "kronspan/annihilator.hpp"
#include "kronspan/linalg.hpp"
#include "kronspan/murphy.hpp"
#include "kronspan/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace kronspan {

namespace {

void require_hook_range(int n, int r, const char *what) {
  if (r < 0 || r >= n - 1)
    throw std::invalid_argument(std::string(what) + ": requires 0 <= r < n - 1");
}

// Coefficients of a group algebra element against the lexicographic list of
// W_n.
SparseVector coordinates(const GroupAlgebraElement &a, const std::vector<Permutation> &perms) {
  std::vector<SparseVector::Entry> e;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    auto c = a.coefficient(perms[i]);
    if (c != 0)
      e.emplace_back(i, c);
  }
  return SparseVector(perms.size(), std::move(e));
}

} // namespace

std::vector<Permutation> annihilator_index_set(int n, int r) {
  const auto threshold = alpha(n, r);
  std::vector<Permutation> out;
  for (const auto &w : all_permutations(n))
    if (!dominates(rsk_cell(w), threshold))
      out.push_back(w);
  return out;
}

AnnihilatorReport theorem2a_check(int n, int r, const Budget &budget) {
  require_hook_range(n, r, "theorem2a_check");
  AnnihilatorReport report;
  report.n = n;
  report.r = r;
  report.kernel_dim = kernel_dim(n, r, budget);
  const auto perms = all_permutations(n);
  const auto u = annihilator_index_set(n, r);
  report.set_size = u.size();
  KazhdanLusztig kl(n);
  RowEchelon ech(perms.size());
  report.annihilates = true;
  for (const auto &x : u) {
    const auto a = kl.c(x).specialize(1);
    if (phi(a, r).nonzeros() != 0)
      report.annihilates = false;
    ech.insert(coordinates(a, perms));
  }
  report.set_rank = ech.rank();
  if (!report.passed())
    throw VerificationError("theorem2a_check failed at n=" + std::to_string(n) +
                            ", r=" + std::to_string(r));
  return report;
}

QuotientReport quotient_tbasis_check(int n, int r, const Budget &budget) {
  require_hook_range(n, r, "quotient_tbasis_check");
  QuotientReport report;
  report.n = n;
  report.r = r;
  report.span_rank = span_rank(n, r, budget);
  const auto perms = all_permutations(n);
  const auto u = annihilator_index_set(n, r);
  KazhdanLusztig kl(n);

  RowEchelon lemma(perms.size());
  std::vector<SparseVector> images;
  std::vector<Permutation> increasing;
  for (const auto &w : perms) {
    if (lis(w) >= n - r)
      increasing.push_back(w);
    if (std::binary_search(u.begin(), u.end(), w)) {
      lemma.insert(coordinates(kl.c(w).specialize(1), perms));
    } else {
      report.complement.push_back(w);
      lemma.insert(coordinates(GroupAlgebraElement::basis_element(w), perms));
      images.push_back(kron_power_vector(w, r));
    }
  }
  report.mixed_basis = lemma.rank() == perms.size();
  report.complement_rank = rank(images);
  report.matches_lis_basis = report.complement == increasing;
  if (!report.passed())
    throw VerificationError("quotient_tbasis_check failed at n=" + std::to_string(n) +
                            ", r=" + std::to_string(r));
  return report;
}

bool SpecializationReport::passed() const {
  if (!annihilates_generic || specializations.empty())
    return false;
  return std::all_of(specializations.begin(), specializations.end(),
                     [&](const SpecializationResult &s) { return s.passed(set_size); });
}

SpecializationReport annihilator_specialization_check(int n, int r, const std::vector<Rational> &xis) {
  require_hook_range(n, r, "annihilator_specialization_check");
  SpecializationReport report;
  report.n = n;
  report.r = r;
  const auto perms = all_permutations(n);
  const auto u = annihilator_index_set(n, r);
  report.set_size = u.size();
  KazhdanLusztig kl(n);

  const auto x_alpha = murphy_lambda(alpha(n, r), MurphyKind::x);
  std::vector<HeckeElement> module;
  for (const auto &w : perms)
    module.push_back(HeckeElement::basis(w) * x_alpha);

  report.annihilates_generic = true;
  for (const auto &x : u) {
    const auto cx = kl.c(x);
    for (const auto &m : module)
      if (!(cx * m).is_zero()) {
        report.annihilates_generic = false;
        break;
      }
    if (!report.annihilates_generic)
      break;
  }

  // action[y][w] = T_y (T_w x_alpha)
  std::vector<std::vector<HeckeElement>> action;
  for (const auto &y : perms) {
    std::vector<HeckeElement> row;
    for (const auto &m : module)
      row.push_back(HeckeElement::basis(y) * m);
    action.push_back(std::move(row));
  }

  const std::size_t size = perms.size();
  for (const auto &xi : xis) {
    SpecializationResult result;
    result.xi = xi;
    RowEchelon m_span(size);
    for (const auto &m : module)
      m_span.insert(coordinates(m.specialize(xi), perms));
    result.module_dim = m_span.rank();

    RowEchelon action_rank(size * size);
    for (const auto &row : action) {
      std::vector<SparseVector::Entry> e;
      for (std::size_t w = 0; w < size; ++w) {
        const auto image = coordinates(row[w].specialize(xi), perms);
        for (const auto &[i, c] : image.entries())
          e.emplace_back(w * size + i, c);
      }
      action_rank.insert(SparseVector(size * size, std::move(e)));
    }
    result.annihilator_dim = size - action_rank.rank();

    RowEchelon set(size);
    for (const auto &x : u)
      set.insert(coordinates(kl.c(x).specialize(xi), perms));
    result.set_rank = set.rank();
    report.specializations.push_back(result);
  }
  return report;
}

KlPropertyReport kl_property_check(int n) {
  KazhdanLusztig kl(n);
  KlPropertyReport report;
  report.n = n;
  for (const auto &w : all_permutations(n)) {
    ++report.elements;
    const auto &cp = kl.cprime(w);
    const auto c = kl.c(w);
    const auto name = w.to_string();
    if (bar(cp) != cp)
      report.failures.push_back("C'_" + name + " is not bar-invariant");
    if (bar(c) != c)
      report.failures.push_back("C_" + name + " is not bar-invariant");
    if (cp.coefficient(w) != LaurentPolynomial(1) || c.coefficient(w) != LaurentPolynomial(1))
      report.failures.push_back("leading coefficient of " + name + " is not 1");
    for (const auto &[y, p] : cp.terms()) {
      if (y == w)
        continue;
      if (!bruhat_leq(y, w))
        report.failures.push_back("C'_" + name + " has a term outside the Bruhat interval");
      if (!p.strictly_negative())
        report.failures.push_back("C'_" + name + " coefficient " + p.to_string() +
                                  " not in v^-1 Z[v^-1]");
    }
    for (const auto &[y, p] : c.terms())
      if (y != w && !p.strictly_positive())
        report.failures.push_back("C_" + name + " coefficient " + p.to_string() +
                                  " not in v Z[v]");
  }
  return report;
}

bool unitriangularity_check(int n) {
  KazhdanLusztig kl(n);
  for (const auto &w : all_permutations(n)) {
    const auto expansion = kl.expand_in_cprime(HeckeElement::basis(w));
    HeckeElement rebuilt(n);
    for (const auto &[y, b] : expansion) {
      if (!bruhat_leq(y, w))
        return false;
      if (y == w && b != LaurentPolynomial(1))
        return false;
      rebuilt += b * kl.cprime(y);
    }
    if (rebuilt != HeckeElement::basis(w))
      return false;
  }
  return true;
}

} // namespace kronspan
