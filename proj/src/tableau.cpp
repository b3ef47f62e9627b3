#include "kronspan/tableau.hpp"
#include "kronspan/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kronspan {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size())
      throw std::invalid_argument("bad partition part '" + tok + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 1; c <= part(1); ++c) {
    int h = 0;
    for (int p : parts_)
      if (p >= c)
        ++h;
    t.push_back(h);
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

bool dominates(const Partition &lam, const Partition &mu) {
  if (lam.weight() != mu.weight())
    throw std::invalid_argument("dominates: partitions of different weights");
  int a = 0, b = 0;
  for (int k = 1; k <= std::max(lam.length(), mu.length()); ++k) {
    a += lam.part(k);
    b += mu.part(k);
    if (a < b)
      return false;
  }
  return true;
}

Partition alpha(int n, int r) {
  if (r < 0 || r >= n)
    throw std::invalid_argument("alpha(n, r) requires 0 <= r < n");
  std::vector<int> parts{n - r};
  parts.insert(parts.end(), static_cast<std::size_t>(r), 1);
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &cur,
                    std::vector<Partition> &out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0)
    throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

unsigned long long hook_length_count(const Partition &lam) {
  const Partition t = lam.transpose();
  // n! / prod(hooks), accumulated as exact integer division at the end.
  Integer num = 1, den = 1;
  for (int i = 2; i <= lam.weight(); ++i)
    num *= i;
  for (int r = 1; r <= lam.length(); ++r)
    for (int c = 1; c <= lam.part(r); ++c)
      den *= (lam.part(r) - c) + (t.part(c) - r) + 1;
  Integer q = num / den;
  return q.get_ui();
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  std::vector<int> lens;
  int n = 0;
  for (const auto &row : rows_) {
    if (row.empty())
      throw std::invalid_argument("tableau rows must be nonempty");
    lens.push_back(static_cast<int>(row.size()));
    n += static_cast<int>(row.size());
  }
  Partition shape(lens); // validates the row lengths
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      int v = rows_[i][j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tableau entries must be exactly 1..n");
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && rows_[i][j - 1] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (i > 0 && rows_[i - 1][j] >= v)
        throw std::invalid_argument("tableau columns must strictly increase");
    }
}

StandardTableau StandardTableau::row_reading(const Partition &shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : shape.parts()) {
    std::vector<int> row(static_cast<std::size_t>(p));
    std::iota(row.begin(), row.end(), next);
    next += p;
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

Partition StandardTableau::shape() const {
  std::vector<int> lens;
  for (const auto &row : rows_)
    lens.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lens));
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto &row : rows_)
    n += static_cast<int>(row.size());
  return n;
}

std::string StandardTableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i)
      s += '/';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j)
        s += ' ';
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

namespace {

// Places n, n-1, ..., 1 into removable corners of a shrinking shape.
void tableaux_rec(std::vector<int> &lens, int value,
                  std::vector<std::vector<int>> &fill,
                  std::vector<StandardTableau> &out) {
  if (value == 0) {
    out.emplace_back(fill);
    return;
  }
  for (std::size_t r = lens.size(); r-- > 0;) {
    int len = lens[r];
    if (len == 0)
      continue;
    bool corner = (r + 1 == lens.size()) || lens[r + 1] < len;
    if (!corner)
      continue;
    fill[r][static_cast<std::size_t>(len - 1)] = value;
    --lens[r];
    tableaux_rec(lens, value - 1, fill, out);
    ++lens[r];
  }
}

} // namespace

std::vector<StandardTableau> enumerate_tableaux(const Partition &lam) {
  std::vector<int> lens = lam.parts();
  std::vector<std::vector<int>> fill;
  for (int p : lens)
    fill.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<StandardTableau> out;
  tableaux_rec(lens, lam.weight(), fill, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> act(const Permutation &w, const StandardTableau &t) {
  if (w.size() != t.size())
    throw std::invalid_argument("act: size mismatch");
  auto rows = t.rows();
  for (auto &row : rows)
    for (auto &v : row)
      v = w(v);
  return rows;
}

Permutation tableau_perm(const StandardTableau &t) {
  const auto target = StandardTableau::row_reading(t.shape());
  std::vector<int> y(static_cast<std::size_t>(t.size()));
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (std::size_t j = 0; j < t.rows()[i].size(); ++j)
      y[static_cast<std::size_t>(target.rows()[i][j] - 1)] = t.rows()[i][j];
  return Permutation(std::move(y));
}

RskResult rsk(const Permutation &w) {
  std::vector<std::vector<int>> p, q;
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({i});
        break;
      }
      auto &cur = p[row];
      auto it = std::upper_bound(cur.begin(), cur.end(), x);
      if (it == cur.end()) {
        cur.push_back(x);
        q[row].push_back(i);
        break;
      }
      std::swap(*it, x);
      ++row;
    }
  }
  StandardTableau pt(std::move(p));
  Partition shape = pt.shape();
  return {std::move(pt), StandardTableau(std::move(q)), std::move(shape)};
}

Permutation rsk_inverse(const StandardTableau &insertion,
                        const StandardTableau &recording) {
  if (insertion.shape() != recording.shape())
    throw std::invalid_argument("rsk_inverse: tableaux of different shapes");
  auto p = insertion.rows();
  const auto &q = recording.rows();
  const int n = insertion.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    // Locate the box recorded at step i; it is a corner of the current shape.
    std::size_t row = 0;
    for (; row < q.size(); ++row)
      if (std::find(q[row].begin(), q[row].end(), i) != q[row].end())
        break;
    int x = p[row].back();
    p[row].pop_back();
    while (row-- > 0) {
      auto &cur = p[row];
      // Largest entry smaller than x is bumped back up.
      auto it = std::lower_bound(cur.begin(), cur.end(), x);
      --it;
      std::swap(*it, x);
    }
    w[static_cast<std::size_t>(i - 1)] = x;
  }
  return Permutation(std::move(w));
}

} // namespace kronspan
