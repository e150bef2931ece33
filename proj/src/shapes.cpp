#include "skewpieri/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skewpieri {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("inner partition is not contained in outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
  for (int r = 1; r <= p.length(); ++r)
    for (int c = 1; c <= p.part(r); ++c) ++out[static_cast<std::size_t>(c - 1)];
  return Partition(std::move(out));
}

SkewShape conjugate(const SkewShape& s) { return {conjugate(s.outer()), conjugate(s.inner())}; }

bool is_strip(const SkewShape& s, StripKind kind) {
  const auto& lam = s.outer();
  const auto& mu = s.inner();
  for (int i = 1; i <= lam.length(); ++i) {
    if (kind == StripKind::horizontal && lam.part(i + 1) > mu.part(i)) return false;
    if (kind == StripKind::vertical && lam.part(i) - mu.part(i) > 1) return false;
  }
  return true;
}

namespace {

std::vector<Partition> horizontal_outer(const Partition& base, int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  const int rows = base.length() + 1;
  std::function<void(int, int)> go = [&](int row, int remaining) {
    if (row > rows) {
      if (remaining == 0) out.emplace_back(current);
      return;
    }
    const int lo = base.part(row);
    const int hi = row == 1 ? lo + remaining : std::min(base.part(row - 1), lo + remaining);
    for (int v = lo; v <= hi; ++v) {
      current.push_back(v);
      go(row + 1, remaining - (v - lo));
      current.pop_back();
    }
  };
  go(1, n);
  return out;
}

std::vector<Partition> horizontal_inner(const Partition& base, int k) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> go = [&](int row, int remaining) {
    if (row > base.length()) {
      if (remaining == 0) out.emplace_back(current);
      return;
    }
    const int hi = base.part(row);
    const int lo = std::max(base.part(row + 1), hi - remaining);
    for (int v = lo; v <= hi; ++v) {
      current.push_back(v);
      go(row + 1, remaining - (hi - v));
      current.pop_back();
    }
  };
  go(1, k);
  return out;
}

std::vector<Partition> sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Partition> enumerate_outer_strips(const Partition& base, int n, StripKind kind) {
  if (n < 0) return {};
  if (kind == StripKind::horizontal) return sorted(horizontal_outer(base, n));
  std::vector<Partition> out;
  for (const auto& p : horizontal_outer(conjugate(base), n)) out.push_back(conjugate(p));
  return sorted(std::move(out));
}

std::vector<Partition> enumerate_inner_strips(const Partition& base, int k, StripKind kind) {
  if (k < 0) return {};
  if (kind == StripKind::horizontal) return sorted(horizontal_inner(base, k));
  std::vector<Partition> out;
  for (const auto& p : horizontal_inner(conjugate(base), k)) out.push_back(conjugate(p));
  return sorted(std::move(out));
}

std::vector<Partition> partitions_of(int n) { return superpartitions(Partition{}, n); }

std::vector<Partition> subpartitions(const Partition& p) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> go = [&](int row) {
    if (row > p.length()) {
      out.emplace_back(current);
      return;
    }
    const int hi = row == 1 ? p.part(1) : std::min(p.part(row), current.back());
    for (int v = 0; v <= hi; ++v) {
      current.push_back(v);
      go(row + 1);
      current.pop_back();
    }
  };
  go(1);
  return sorted(std::move(out));
}

std::vector<Partition> superpartitions(const Partition& base, int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> current;
  const int rows = base.length() + n;
  std::function<void(int, int)> go = [&](int row, int remaining) {
    if (remaining == 0 && row > base.length()) {
      out.emplace_back(current);
      return;
    }
    if (row > rows) return;
    const int lo = base.part(row);
    int hi = lo + remaining;
    if (row > 1) hi = std::min(hi, current.back());
    for (int v = lo; v <= hi; ++v) {
      current.push_back(v);
      go(row + 1, remaining - (v - lo));
      current.pop_back();
    }
  };
  go(1, n);
  return sorted(std::move(out));
}

StarPlacement star_placement(const SkewShape& a, const SkewShape& b) {
  if (a.empty()) return {b, 0, 0, 0, 0};
  if (b.empty()) return {a, 0, 0, 0, 0};

  const auto& lam = a.outer();
  const auto& mu = a.inner();
  const auto& sigma = b.outer();
  const auto& tau = b.inner();

  int q = 1;  // bottom non-empty row of a
  while (lam.part(q) == mu.part(q)) ++q;
  int p = sigma.length();  // top non-empty row of b
  while (sigma.part(p) == tau.part(p)) --p;

  const int t = std::max(0, tau.part(p) - lam.part(q));
  const int s = lam.part(q) + t - tau.part(p);

  std::vector<int> outer;
  std::vector<int> inner;
  for (int i = 1; i <= p; ++i) {
    outer.push_back(sigma.part(i) + s);
    inner.push_back(tau.part(i) + s);
  }
  for (int i = q; i <= lam.length(); ++i) {
    outer.push_back(lam.part(i) + t);
    inner.push_back(mu.part(i) + t);
  }
  return {SkewShape(Partition(outer), Partition(inner)), p + 1 - q, t, 0, s};
}

SkewShape star(const SkewShape& a, const SkewShape& b) { return star_placement(a, b).shape; }

namespace {

std::vector<Cell> normalized_cells(const SkewShape& s) {
  auto cells = s.cells();
  if (cells.empty()) return cells;
  int min_row = cells.front().row;
  int min_col = cells.front().col;
  for (const auto& c : cells) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (auto& c : cells) {
    c.row -= min_row;
    c.col -= min_col;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

bool translation_equivalent(const SkewShape& a, const SkewShape& b) {
  return normalized_cells(a) == normalized_cells(b);
}

Corners corners(const SkewShape& s) {
  Corners out;
  for (const auto& c : s.cells()) {
    if (!s.contains({c.row - 1, c.col}) && !s.contains({c.row, c.col - 1})) out.inside.push_back(c);
    if (!s.contains({c.row + 1, c.col}) && !s.contains({c.row, c.col + 1})) out.outside.push_back(c);
  }
  return out;
}

}  // namespace skewpieri
