#include "kronspan/linalg.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kronspan {

namespace {

void require_square(const SparseMatrix &m, std::size_t side, const char *what) {
  if (m.rows() != side || m.cols() != side)
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(side) +
                                "x" + std::to_string(side) + " matrix");
}

} // namespace

bool is_doubly_stochastic(const SparseMatrix &m) {
  if (m.rows() != m.cols())
    return false;
  for (const auto &[key, value] : m.entries())
    if (value < 0)
      return false;
  for (const auto &s : m.row_sums())
    if (s != 1)
      return false;
  for (const auto &s : m.col_sums())
    if (s != 1)
      return false;
  return true;
}

OmegaGeometry::OmegaGeometry(int n, int r, const Budget &budget) : n_(n), r_(r) {
  if (n < 1 || r < 0)
    throw std::invalid_argument("omega geometry: requires n >= 1, r >= 0");
  budget.require_permutations(factorial(n), "omega geometry");
  side_ = ipow(static_cast<std::size_t>(n), r);
  budget.require_cells(static_cast<unsigned long long>(side_) * factorial(n), "omega geometry");

  const auto perms = all_permutations(n);
  RowEchelon ech(side_ * side_);
  for (const auto &w : perms) {
    if (lis(w) < n - r)
      continue;
    auto v = kron_power_vector(w, r);
    if (!ech.insert(v))
      throw VerificationError("omega geometry: increasing basis is dependent");
    basis_.push_back(w);
    basis_vectors_.push_back(std::move(v));
  }
  for (const auto &w : perms)
    if (!ech.contains(kron_power_vector(w, r)))
      throw VerificationError("omega geometry: increasing basis does not span");

  std::unordered_map<std::size_t, std::vector<std::size_t>> hits;
  for (std::size_t b = 0; b < basis_.size(); ++b)
    for (std::size_t col = 0; col < side_; ++col)
      hits[image_index(basis_[b], col, r) * side_ + col].push_back(b);
  std::vector<std::size_t> flats;
  flats.reserve(hits.size());
  for (const auto &[flat, support] : hits)
    flats.push_back(flat);
  std::sort(flats.begin(), flats.end());
  std::map<std::vector<std::size_t>, std::size_t> index_of;
  for (auto flat : flats) {
    const auto &support = hits[flat];
    auto [it, inserted] = index_of.try_emplace(support, supports_.size());
    if (inserted) {
      supports_.push_back(support);
      entries_.emplace_back();
    }
    entries_[it->second].push_back(flat);
    functional_index_[flat] = it->second;
  }
}

std::optional<std::size_t> OmegaGeometry::functional_of(std::size_t flat) const {
  auto it = functional_index_.find(flat);
  if (it == functional_index_.end())
    return std::nullopt;
  return it->second;
}

Rational OmegaGeometry::functional_value(std::size_t k, const std::vector<Rational> &coords) const {
  Rational total;
  for (auto b : supports_.at(k))
    total += coords.at(b);
  return total;
}

SparseMatrix OmegaGeometry::to_matrix(const std::vector<Rational> &coords) const {
  if (coords.size() != dimension())
    throw std::invalid_argument("omega geometry: coordinate vector of wrong length");
  SparseMatrix m(side_, side_);
  for (std::size_t k = 0; k < supports_.size(); ++k) {
    Rational v = functional_value(k, coords);
    if (v == 0)
      continue;
    for (auto flat : entries_[k])
      m.set(flat / side_, flat % side_, v);
  }
  return m;
}

std::optional<std::vector<Rational>> OmegaGeometry::coordinates_of(const SparseMatrix &m) const {
  if (m.rows() != side_ || m.cols() != side_)
    return std::nullopt;
  for (const auto &[key, value] : m.entries())
    if (!functional_of(key.first * side_ + key.second))
      return std::nullopt;
  SparseMatrix a(supports_.size(), dimension());
  std::vector<Rational> rhs(supports_.size());
  for (std::size_t k = 0; k < supports_.size(); ++k) {
    for (auto b : supports_[k])
      a.set(k, b, 1);
    const auto first = entries_[k].front();
    rhs[k] = m.get(first / side_, first % side_);
    for (auto flat : entries_[k])
      if (m.get(flat / side_, flat % side_) != rhs[k])
        return std::nullopt;
  }
  return solve(a, rhs);
}

std::vector<std::size_t> OmegaGeometry::irredundant_functionals() const {
  std::vector<bool> singleton(dimension(), false);
  for (const auto &s : supports_)
    if (s.size() == 1)
      singleton[s[0]] = true;
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < supports_.size(); ++k) {
    const auto &s = supports_[k];
    bool implied = s.size() > 1 && std::all_of(s.begin(), s.end(),
                                                [&](std::size_t b) { return singleton[b]; });
    if (!implied)
      kept.push_back(k);
  }
  return kept;
}

std::size_t OmegaGeometry::active_rank(const std::vector<Rational> &coords) const {
  RowEchelon ech(dimension());
  std::vector<SparseVector::Entry> ones;
  for (std::size_t b = 0; b < dimension(); ++b)
    ones.emplace_back(b, Rational(1));
  ech.insert(SparseVector(dimension(), std::move(ones)));
  for (std::size_t k = 0; k < supports_.size(); ++k) {
    if (functional_value(k, coords) != 0)
      continue;
    std::vector<SparseVector::Entry> e;
    for (auto b : supports_[k])
      e.emplace_back(b, Rational(1));
    ech.insert(SparseVector(dimension(), std::move(e)));
    if (ech.rank() == dimension())
      break;
  }
  return ech.rank();
}

bool omega_membership(const SparseMatrix &m, int n, int r) {
  const auto side = ipow(static_cast<std::size_t>(n), r);
  require_square(m, side, "omega_membership");
  if (!is_doubly_stochastic(m))
    return false;
  RowEchelon ech(side * side);
  for (const auto &w : all_permutations(n))
    ech.insert(kron_power_vector(w, r));
  return ech.contains(m.vectorize());
}

std::vector<Rational> kronecker_diagonal(const SparseMatrix &m, const Permutation &w, int r) {
  const auto side = ipow(static_cast<std::size_t>(w.size()), r);
  require_square(m, side, "kronecker_diagonal");
  std::vector<Rational> out;
  out.reserve(side);
  for (std::size_t col = 0; col < side; ++col)
    out.push_back(m.get(image_index(w, col, r), col));
  return out;
}

std::optional<Permutation> positive_kron_diagonal(const SparseMatrix &m, int n, int r) {
  const auto side = ipow(static_cast<std::size_t>(n), r);
  require_square(m, side, "positive_kron_diagonal");
  for (const auto &w : all_permutations(n)) {
    bool positive = true;
    for (std::size_t col = 0; col < side && positive; ++col)
      positive = m.get(image_index(w, col, r), col) > 0;
    if (positive)
      return w;
  }
  return std::nullopt;
}

GreedyResult greedy_decompose(const SparseMatrix &m, int n, int r) {
  if (!omega_membership(m, n, r))
    throw std::invalid_argument("greedy_decompose: matrix is not in Omega");
  GreedyResult result;
  SparseMatrix current = m;
  Rational mass(1);
  result.nonzero_trace.push_back(current.nonzeros());
  while (true) {
    auto w = positive_kron_diagonal(current, n, r);
    if (!w) {
      result.residual = current;
      return result;
    }
    auto diag = kronecker_diagonal(current, *w, r);
    Rational c = *std::min_element(diag.begin(), diag.end());
    result.weights.emplace_back(*w, mass * c);
    if (c == 1) {
      if (current != kron_power(*w, r))
        throw std::logic_error("greedy_decompose: unit diagonal in a non-permutation matrix");
      break;
    }
    current -= c * kron_power(*w, r);
    Rational scale = 1 / (1 - c);
    current *= scale;
    mass *= 1 - c;
    if (current.nonzeros() >= result.nonzero_trace.back())
      throw std::logic_error("greedy_decompose: step did not create a new zero");
    result.nonzero_trace.push_back(current.nonzeros());
  }
  SparseMatrix rebuilt(m.rows(), m.cols());
  Rational total;
  for (const auto &[w, c] : result.weights) {
    rebuilt += c * kron_power(w, r);
    total += c;
  }
  if (rebuilt != m || total != 1)
    throw std::logic_error("greedy_decompose: weights do not reproduce the matrix");
  result.success = true;
  return result;
}

ConvexCertificate conv_hull_membership(const SparseMatrix &m, int n, int r,
                                       const Budget &budget) {
  const auto side = ipow(static_cast<std::size_t>(n), r);
  require_square(m, side, "conv_hull_membership");
  budget.require_permutations(factorial(n), "conv_hull_membership");
  budget.require_cells(static_cast<unsigned long long>(side) * side, "conv_hull_membership");
  const auto perms = all_permutations(n);
  const std::size_t cells = side * side;

  ConvexCertificate cert;
  auto farkas = [&](std::vector<std::pair<std::size_t, Rational>> entries) {
    std::vector<Rational> y(cells + 1);
    for (auto &[i, v] : entries)
      y[i] = v;
    cert.farkas = std::move(y);
    return cert;
  };

  std::unordered_map<std::size_t, std::vector<std::size_t>> hits;
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (std::size_t col = 0; col < side; ++col)
      hits[image_index(perms[p], col, r) * side + col].push_back(p);

  // An entry no permutation reaches must vanish.
  for (const auto &[key, value] : m.entries()) {
    std::size_t flat = key.first * side + key.second;
    if (!hits.count(flat))
      return farkas({{flat, Rational(value > 0 ? 1 : -1)}});
  }

  std::vector<std::size_t> flats;
  for (const auto &[flat, support] : hits)
    flats.push_back(flat);
  std::sort(flats.begin(), flats.end());
  std::map<std::vector<std::size_t>, std::size_t> group_of;
  std::vector<std::size_t> representative;
  for (auto flat : flats) {
    auto [it, inserted] = group_of.try_emplace(hits[flat], representative.size());
    if (inserted) {
      representative.push_back(flat);
      continue;
    }
    // Entries sharing a support must agree.
    auto rep = representative[it->second];
    Rational a = m.get(rep / side, rep % side), b = m.get(flat / side, flat % side);
    if (a != b)
      return a > b ? farkas({{rep, Rational(1)}, {flat, Rational(-1)}})
                   : farkas({{flat, Rational(1)}, {rep, Rational(-1)}});
  }

  const std::size_t groups = representative.size();
  SparseMatrix a(groups + 1, perms.size());
  std::vector<Rational> rhs(groups + 1);
  for (const auto &[support, g] : group_of)
    for (auto p : support)
      a.set(g, p, 1);
  for (std::size_t g = 0; g < groups; ++g)
    rhs[g] = m.get(representative[g] / side, representative[g] % side);
  for (std::size_t p = 0; p < perms.size(); ++p)
    a.set(groups, p, 1);
  rhs[groups] = 1;

  auto result = lp_feasible(a, rhs, std::vector<bool>(perms.size(), true));
  if (auto *point = std::get_if<FeasiblePoint>(&result)) {
    std::map<Permutation, Rational> weights;
    for (std::size_t p = 0; p < perms.size(); ++p)
      if (point->x[p] != 0)
        weights.emplace(perms[p], point->x[p]);
    cert.weights = std::move(weights);
    return cert;
  }
  const auto &y = std::get<FarkasCertificate>(result).y;
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t g = 0; g < groups; ++g)
    if (y[g] != 0)
      entries.emplace_back(representative[g], y[g]);
  entries.emplace_back(cells, y[groups]);
  return farkas(std::move(entries));
}

bool verify_certificate(const ConvexCertificate &cert, const SparseMatrix &m, int n, int r) {
  const auto side = ipow(static_cast<std::size_t>(n), r);
  if (m.rows() != side || m.cols() != side || cert.weights.has_value() == cert.farkas.has_value())
    return false;
  if (cert.weights) {
    SparseMatrix rebuilt(side, side);
    Rational total;
    for (const auto &[w, c] : *cert.weights) {
      if (w.size() != n || c < 0)
        return false;
      rebuilt += c * kron_power(w, r);
      total += c;
    }
    return total == 1 && rebuilt == m;
  }
  const auto &y = *cert.farkas;
  const std::size_t cells = side * side;
  if (y.size() != cells + 1)
    return false;
  for (const auto &w : all_permutations(n)) {
    Rational column = y[cells];
    for (std::size_t col = 0; col < side; ++col)
      column += y[image_index(w, col, r) * side + col];
    if (column > 0)
      return false;
  }
  Rational value = y[cells];
  for (const auto &[key, entry] : m.entries())
    value += y[key.first * side + key.second] * entry;
  return value > 0;
}

std::string certificate_json(const ConvexCertificate &cert) {
  std::ostringstream out;
  if (cert.weights) {
    out << "{\"weights\": {";
    bool first = true;
    for (const auto &[w, c] : *cert.weights) {
      out << (first ? "" : ", ") << '"' << w.to_string() << "\": \"" << to_fraction(c) << '"';
      first = false;
    }
    out << "}}";
  } else if (cert.farkas) {
    out << "{\"farkas\": [";
    for (std::size_t i = 0; i < cert.farkas->size(); ++i)
      out << (i ? ", " : "") << '"' << to_fraction((*cert.farkas)[i]) << '"';
    out << "]}";
  } else {
    out << "{}";
  }
  return out.str();
}

OmegaPoint roberson_schmidt_matrix() {
  GroupAlgebraElement a(4);
  a.add(Permutation::identity(4), Rational(-1, 5));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      std::vector<int> word{1, 2, 3, 4};
      std::swap(word[i - 1], word[j - 1]);
      a.add(Permutation(word), Rational(1, 5));
    }
  return OmegaPoint{phi(a, 2), 4, 2, std::nullopt};
}

bool is_vertex(const OmegaGeometry &geom, const std::vector<Rational> &coords) {
  return geom.active_rank(coords) == geom.dimension();
}

bool is_vertex(const SparseMatrix &m, int n, int r) {
  if (!omega_membership(m, n, r))
    throw std::invalid_argument("is_vertex: matrix is not in Omega");
  OmegaGeometry geom(n, r);
  auto coords = geom.coordinates_of(m);
  if (!coords)
    throw std::logic_error("is_vertex: member of Omega without coordinates");
  return is_vertex(geom, *coords);
}

std::vector<Rational> omega_lp_vertex(const OmegaGeometry &geom,
                                      const std::vector<Rational> &objective) {
  const std::size_t d = geom.dimension();
  if (objective.size() != d)
    throw std::invalid_argument("omega_lp_vertex: objective of wrong length");
  const auto kept = geom.irredundant_functionals();
  // Variables: d free coordinates, then one slack per kept functional.
  SparseMatrix a(kept.size() + 1, d + kept.size());
  std::vector<Rational> rhs(kept.size() + 1);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (auto b : geom.supports()[kept[i]])
      a.set(i, b, 1);
    a.set(i, d + i, -1);
  }
  for (std::size_t b = 0; b < d; ++b)
    a.set(kept.size(), b, 1);
  rhs[kept.size()] = 1;
  std::vector<bool> nonneg(d + kept.size(), true);
  std::fill(nonneg.begin(), nonneg.begin() + static_cast<std::ptrdiff_t>(d), false);
  std::vector<Rational> cost(d + kept.size());
  std::copy(objective.begin(), objective.end(), cost.begin());
  auto sol = lp_maximize(a, rhs, nonneg, cost);
  if (sol.status != LpStatus::optimal)
    throw std::logic_error("omega_lp_vertex: Omega LP is not bounded and feasible");
  return {sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(d)};
}

std::vector<OmegaPoint> sample_omega_points(const OmegaGeometry &geom, std::size_t count,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coefficient(-9, 9), weight(1, 9), pieces(1, 3);
  const std::size_t d = geom.dimension();
  std::vector<OmegaPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int k = pieces(rng);
    std::vector<Rational> coords(d);
    Rational total;
    for (int j = 0; j < k; ++j) {
      std::vector<Rational> objective(d);
      for (auto &c : objective)
        c = coefficient(rng);
      auto vertex = omega_lp_vertex(geom, objective);
      Rational t = weight(rng);
      for (std::size_t b = 0; b < d; ++b)
        coords[b] += t * vertex[b];
      total += t;
    }
    for (auto &c : coords)
      c /= total;
    out.push_back(OmegaPoint{geom.to_matrix(coords), geom.n(), geom.r(), coords});
  }
  return out;
}

} // namespace kronspan
