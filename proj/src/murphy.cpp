#include "kronspan/murphy.hpp"

#include <stdexcept>

namespace kronspan {

namespace {

// Blocks [start, end) of consecutive values forming the rows of t^lambda.
std::vector<std::pair<int, int>> row_blocks(const Partition &lam) {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int part : lam.parts()) {
    out.emplace_back(start, start + part);
    start += part;
  }
  return out;
}

void require_shape(const Partition &lam, const StandardTableau &t, const char *what) {
  if (t.shape() != lam)
    throw std::invalid_argument(std::string(what) + ": tableau " + t.to_string() +
                                " does not have shape " + lam.to_string());
}

} // namespace

std::vector<Permutation> young_subgroup(const Partition &lam) {
  const int n = lam.weight();
  std::vector<Permutation> out;
  const auto blocks = row_blocks(lam);
  for (const auto &w : all_permutations(n)) {
    bool keeps = true;
    for (const auto &[start, end] : blocks)
      for (int i = start; i < end && keeps; ++i)
        keeps = w(i) >= start && w(i) < end;
    if (keeps)
      out.push_back(w);
  }
  return out;
}

Permutation young_longest(const Partition &lam) {
  std::vector<int> word;
  for (const auto &[start, end] : row_blocks(lam))
    for (int i = end - 1; i >= start; --i)
      word.push_back(i);
  return Permutation(word);
}

HeckeElement murphy_lambda(const Partition &lam, MurphyKind kind) {
  HeckeElement out(lam.weight());
  for (const auto &w : young_subgroup(lam)) {
    const int l = length(w);
    out.add(w, kind == MurphyKind::x
                   ? LaurentPolynomial::monomial(1, l)
                   : LaurentPolynomial::monomial(l % 2 == 0 ? 1 : -1, -l));
  }
  return out;
}

HeckeElement murphy(const Partition &lam, const StandardTableau &s, const StandardTableau &t,
                    MurphyKind kind) {
  require_shape(lam, s, "murphy");
  require_shape(lam, t, "murphy");
  return HeckeElement::basis(tableau_perm(s)) * murphy_lambda(lam, kind) *
         HeckeElement::basis(tableau_perm(t).inverse());
}

std::vector<HeckeElement> murphy_basis(int n, MurphyKind kind) {
  std::vector<HeckeElement> out;
  for (const auto &lam : partitions_of(n)) {
    const auto tabs = enumerate_tableaux(lam);
    const auto z = murphy_lambda(lam, kind);
    for (const auto &s : tabs)
      for (const auto &t : tabs)
        out.push_back(HeckeElement::basis(tableau_perm(s)) * z *
                      HeckeElement::basis(tableau_perm(t).inverse()));
  }
  return out;
}

HeckeElement geck_tilde_y(KazhdanLusztig &kl, const Partition &lam, const StandardTableau &s,
                          const StandardTableau &t) {
  require_shape(lam, s, "geck_tilde_y");
  require_shape(lam, t, "geck_tilde_y");
  return HeckeElement::basis(tableau_perm(s)) * kl.c(young_longest(lam)) *
         HeckeElement::basis(tableau_perm(t).inverse());
}

Eq10Report eq10_check(int n) {
  KazhdanLusztig kl(n);
  Eq10Report report;
  report.n = n;
  for (const auto &lam : partitions_of(n)) {
    const auto tabs = enumerate_tableaux(lam);
    const auto scale = LaurentPolynomial::monomial(1, length(young_longest(lam)));
    int sign = 0;
    for (const auto &s : tabs)
      for (const auto &t : tabs) {
        ++report.pairs_checked;
        const auto tilde = geck_tilde_y(kl, lam, s, t);
        const auto y = scale * murphy(lam, s, t, MurphyKind::y);
        int observed = tilde == y ? 1 : tilde == LaurentPolynomial(-1) * y ? -1 : 0;
        if (observed == 0 || (sign != 0 && observed != sign)) {
          report.failures.push_back("shape " + lam.to_string() + ", s=" + s.to_string() +
                                    ", t=" + t.to_string() +
                                    (observed == 0 ? ": no sign matches" : ": sign changes"));
          continue;
        }
        sign = observed;
      }
    if (sign != 0)
      report.signs.emplace(lam, sign);
  }
  return report;
}

GeckReport geck_triangularity_check(int n) {
  KazhdanLusztig kl(n);
  GeckReport report;
  report.n = n;
  for (const auto &lam : partitions_of(n)) {
    const auto dual = lam.transpose();
    const auto tabs = enumerate_tableaux(lam);
    for (const auto &s : tabs)
      for (const auto &t : tabs) {
        ++report.pairs_checked;
        const auto label = "shape " + lam.to_string() + ", s=" + s.to_string() +
                           ", t=" + t.to_string();
        int leading = 0;
        for (const auto &[x, a] : kl.expand_in_c(geck_tilde_y(kl, lam, s, t))) {
          const auto shape = rsk_cell(x);
          if (shape == dual) {
            auto rest = a;
            if (a.coefficient(0) == 1) {
              ++leading;
              rest -= LaurentPolynomial(1);
            }
            if (!rest.strictly_positive())
              report.failures.push_back(label + ": same-cell coefficient " + a.to_string() +
                                        " at " + x.to_string());
          } else if (!dominates(dual, shape)) {
            report.failures.push_back(label + ": term " + x.to_string() + " of RSK-shape " +
                                      shape.to_string() + " not below " + dual.to_string());
          }
        }
        if (leading != 1)
          report.failures.push_back(label + ": " + std::to_string(leading) +
                                    " leading cell members");
      }
  }
  return report;
}

} // namespace kronspan
