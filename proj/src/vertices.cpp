#include "kronspan/linalg.hpp"
#include "kronspan/stochastic.hpp"
#include "kronspan/tensor.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace kronspan {

namespace {

class Bits {
public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  Bits operator&(const Bits &o) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] &= o.words_[i];
    return out;
  }
  bool contains(const Bits &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0)
        return false;
    return true;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  std::vector<Integer> x;
  Bits zeros;
};

Integer dot(const std::vector<Integer> &a, const std::vector<Integer> &x) {
  Integer s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      s += a[i] * x[i];
  return s;
}

void make_primitive(std::vector<Integer> &x) {
  Integer g;
  for (const auto &v : x)
    g = gcd(g, v);
  if (g > 1)
    for (auto &v : x)
      v /= g;
}

std::vector<Integer> primitive_from(const std::vector<Rational> &v) {
  Integer l(1);
  for (const auto &q : v)
    l = lcm(l, q.get_den());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto &q : v)
    out.push_back(Integer(q.get_num() * (l / q.get_den())));
  make_primitive(out);
  return out;
}

SparseVector to_sparse(const std::vector<Integer> &row) {
  std::vector<SparseVector::Entry> e;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0)
      e.emplace_back(i, Rational(row[i]));
  return SparseVector(row.size(), std::move(e));
}

bool dense_less(const OmegaPoint &a, const OmegaPoint &b) {
  return a.matrix.entries() < b.matrix.entries();
}

std::vector<Integer> indicator(const std::vector<std::size_t> &support, std::size_t dim) {
  std::vector<Integer> row(dim);
  for (auto b : support)
    row[b] = 1;
  return row;
}

OmegaPoint vertex_from_ray(const OmegaGeometry &geom, const std::vector<Integer> &ray) {
  Integer total;
  for (const auto &v : ray)
    total += v;
  if (total <= 0)
    throw std::logic_error("vertex enumeration: ray with nonpositive coordinate sum");
  std::vector<Rational> coords;
  coords.reserve(ray.size());
  for (const auto &v : ray) {
    Rational q(v, total);
    q.canonicalize();
    coords.push_back(q);
  }
  if (!is_vertex(geom, coords))
    throw VerificationError("vertex enumeration: extreme ray fails the vertex rank test");
  return OmegaPoint{geom.to_matrix(coords), geom.n(), geom.r(), coords};
}

VertexEnumeration trivial_enumeration(const OmegaGeometry &geom) {
  VertexEnumeration out;
  out.vertices.push_back(vertex_from_ray(geom, std::vector<Integer>(geom.dimension(), 1)));
  out.max_intermediate_rays = 1;
  return out;
}

} // namespace

std::vector<std::vector<Integer>> extreme_rays(const std::vector<std::vector<Integer>> &rows,
                                               std::size_t dim, std::size_t *max_intermediate,
                                               std::size_t ray_limit) {
  for (const auto &row : rows)
    if (row.size() != dim)
      throw std::invalid_argument("extreme_rays: row of wrong length");

  // Initial simplicial cone from `dim` independent rows.
  RowEchelon ech(dim);
  std::vector<std::size_t> initial;
  for (std::size_t i = 0; i < rows.size() && initial.size() < dim; ++i)
    if (ech.insert(to_sparse(rows[i])))
      initial.push_back(i);
  if (initial.size() < dim)
    throw std::invalid_argument("extreme_rays: cone is not pointed");

  SparseMatrix basis(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (rows[initial[i]][j] != 0)
        basis.set(i, j, Rational(rows[initial[i]][j]));

  std::vector<bool> done(rows.size(), false);
  std::vector<std::size_t> order; // position in `order` is the bit index
  for (auto i : initial) {
    done[i] = true;
    order.push_back(i);
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!done[i])
      order.push_back(i);

  std::vector<Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Rational> e(dim);
    e[i] = 1;
    auto x = solve(basis, e);
    if (!x)
      throw std::logic_error("extreme_rays: singular initial basis");
    Ray ray{primitive_from(*x), Bits(rows.size())};
    for (std::size_t j = 0; j < dim; ++j)
      if (j != i)
        ray.zeros.set(j);
    rays.push_back(std::move(ray));
  }
  std::size_t peak = rays.size();

  for (std::size_t pos = dim; pos < order.size(); ++pos) {
    const auto &a = rows[order[pos]];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].x);
      int s = sgn(value[i]);
      (s > 0 ? plus : s < 0 ? minus : zero).push_back(i);
    }
    if (minus.empty()) {
      for (auto i : zero)
        rays[i].zeros.set(pos);
      continue;
    }
    std::vector<Ray> next;
    for (auto i : plus)
      next.push_back(rays[i]);
    for (auto i : zero) {
      next.push_back(rays[i]);
      next.back().zeros.set(pos);
    }
    for (auto p : plus)
      for (auto q : minus) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim)
          continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k)
          if (k != p && k != q && rays[k].zeros.contains(common))
            adjacent = false;
        if (!adjacent)
          continue;
        Ray ray{std::vector<Integer>(dim), common};
        for (std::size_t j = 0; j < dim; ++j)
          ray.x[j] = value[p] * rays[q].x[j] - value[q] * rays[p].x[j];
        make_primitive(ray.x);
        ray.zeros.set(pos);
        next.push_back(std::move(ray));
      }
    rays = std::move(next);
    peak = std::max(peak, rays.size());
    if (ray_limit != 0 && rays.size() > ray_limit)
      throw BudgetExceeded("extreme_rays: " + std::to_string(rays.size()) +
                           " intermediate rays exceed the limit of " + std::to_string(ray_limit));
  }
  if (max_intermediate)
    *max_intermediate = peak;

  std::vector<std::vector<Integer>> out;
  out.reserve(rays.size());
  for (auto &ray : rays)
    out.push_back(std::move(ray.x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexEnumeration enumerate_vertices(int n, int r, const Budget &budget) {
  OmegaGeometry geom(n, r, budget);
  const std::size_t d = geom.dimension();
  if (d == 1)
    return trivial_enumeration(geom);
  std::vector<std::vector<Integer>> rows;
  for (auto k : geom.irredundant_functionals())
    rows.push_back(indicator(geom.supports()[k], d));

  VertexEnumeration out;
  std::vector<std::vector<Integer>> rays;
  try {
    rays = extreme_rays(rows, d, &out.max_intermediate_rays, budget.max_cells);
  } catch (const BudgetExceeded &) {
    out.complete = false;
    return out;
  }
  for (const auto &ray : rays)
    out.vertices.push_back(vertex_from_ray(geom, ray));
  std::sort(out.vertices.begin(), out.vertices.end(), dense_less);
  return out;
}

VertexEnumeration enumerate_vertices_by_edges(int n, int r, const Budget &budget) {
  OmegaGeometry geom(n, r, budget);
  const std::size_t d = geom.dimension();
  if (d == 1)
    return trivial_enumeration(geom);
  const auto kept = geom.irredundant_functionals();
  std::vector<std::vector<Integer>> rows;
  for (auto k : kept)
    rows.push_back(indicator(geom.supports()[k], d));
  const std::vector<Integer> ones(d, 1), minus_ones(d, -1);

  const auto &basis = geom.basis();
  auto id = std::find(basis.begin(), basis.end(), Permutation::identity(n));
  std::vector<Rational> start(d);
  start[static_cast<std::size_t>(id - basis.begin())] = 1;

  VertexEnumeration out;
  std::set<std::vector<Rational>> seen{start};
  std::deque<std::vector<Rational>> queue{start};
  while (!queue.empty()) {
    auto v = std::move(queue.front());
    queue.pop_front();
    std::vector<Rational> slack(rows.size());
    std::vector<std::vector<Integer>> tangent{ones, minus_ones};
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t b = 0; b < d; ++b)
        if (rows[k][b] != 0)
          slack[k] += v[b];
      if (slack[k] == 0)
        tangent.push_back(rows[k]);
    }
    std::size_t peak = 0;
    std::vector<std::vector<Integer>> directions;
    try {
      directions = extreme_rays(tangent, d, &peak, budget.max_cells);
    } catch (const BudgetExceeded &) {
      out.complete = false;
      break;
    }
    out.max_intermediate_rays = std::max(out.max_intermediate_rays, peak);
    for (const auto &e : directions) {
      // Ratio test along the edge v + t e.
      std::optional<Rational> step;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        Integer rate = dot(rows[k], e);
        if (rate >= 0)
          continue;
        Rational t = slack[k] / Rational(-rate);
        if (!step || t < *step)
          step = t;
      }
      if (!step || *step <= 0)
        throw std::logic_error("edge walk: edge direction is unbounded or degenerate");
      std::vector<Rational> w(d);
      for (std::size_t b = 0; b < d; ++b)
        w[b] = v[b] + *step * Rational(e[b]);
      if (seen.insert(w).second)
        queue.push_back(std::move(w));
    }
  }
  for (const auto &coords : seen) {
    if (!is_vertex(geom, coords))
      throw VerificationError("edge walk: reached a point that fails the vertex rank test");
    out.vertices.push_back(OmegaPoint{geom.to_matrix(coords), n, r, coords});
  }
  std::sort(out.vertices.begin(), out.vertices.end(), dense_less);
  return out;
}

} // namespace kronspan
