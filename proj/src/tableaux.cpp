#include "skewpieri/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "skewpieri/errors.hpp"

namespace skewpieri {

Composition::Composition(std::vector<int> c) : counts(std::move(c)) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

int Composition::size() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

bool Composition::is_partition() const noexcept {
  return std::is_sorted(counts.begin(), counts.end(), std::greater<>());
}

Tableau::Tableau(const SkewShape& shape, std::vector<std::vector<int>> rows) {
  const int n = shape.outer().length();
  rows.resize(static_cast<std::size_t>(std::max(n, static_cast<int>(rows.size()))));
  for (int r = 1; r <= static_cast<int>(rows.size()); ++r) {
    const auto want = static_cast<std::size_t>(shape.outer().part(r) - shape.inner().part(r));
    if (rows[static_cast<std::size_t>(r - 1)].size() != want)
      throw std::invalid_argument("row " + std::to_string(r) + " length disagrees with shape");
    inner_.push_back(shape.inner().part(r));
  }
  rows_ = std::move(rows);
  trim();
}

Tableau Tableau::empty_on(const Partition& p) {
  return Tableau(SkewShape(p, p), {});
}

SkewShape Tableau::shape() const {
  std::vector<int> outer;
  for (int r = 1; r <= num_rows(); ++r) outer.push_back(this->outer(r));
  return {Partition(outer), Partition(inner_)};
}

int Tableau::inner(int r) const noexcept {
  return r >= 1 && r <= num_rows() ? inner_[static_cast<std::size_t>(r - 1)] : 0;
}

int Tableau::outer(int r) const noexcept {
  return r >= 1 && r <= num_rows() ? inner(r) + static_cast<int>(rows_[static_cast<std::size_t>(r - 1)].size()) : 0;
}

std::span<const int> Tableau::row(int r) const noexcept {
  if (r < 1 || r > num_rows()) return {};
  return rows_[static_cast<std::size_t>(r - 1)];
}

int Tableau::cell_count() const noexcept {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

int Tableau::at(Cell c) const {
  if (!contains(c)) throw std::out_of_range("cell outside tableau");
  return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - inner(c.row) - 1)];
}

void Tableau::set(Cell c, int value) {
  if (!contains(c)) throw std::out_of_range("cell outside tableau");
  rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - inner(c.row) - 1)] = value;
}

void Tableau::ensure_row(int r) {
  while (num_rows() < r) {
    inner_.push_back(0);
    rows_.emplace_back();
  }
}

void Tableau::trim() {
  while (!rows_.empty() && rows_.back().empty() && inner_.back() == 0) {
    rows_.pop_back();
    inner_.pop_back();
  }
}

void Tableau::push_right(int r, int value) {
  if (r < 1 || (r > 1 && outer(r - 1) < outer(r) + 1))
    throw InvalidResult("adding a cell at the end of row " + std::to_string(r) + " breaks the outer shape");
  ensure_row(r);
  rows_[static_cast<std::size_t>(r - 1)].push_back(value);
}

void Tableau::push_left(int r, int value) {
  if (r < 1 || inner(r) < 1 || inner(r) - 1 < inner(r + 1))
    throw InvalidResult("adding a cell at the start of row " + std::to_string(r) + " breaks the inner shape");
  auto& row = rows_[static_cast<std::size_t>(r - 1)];
  row.insert(row.begin(), value);
  --inner_[static_cast<std::size_t>(r - 1)];
}

int Tableau::pop_right(int r) {
  if (outer(r) == inner(r) || outer(r) - 1 < outer(r + 1))
    throw InvalidResult("cannot remove the last cell of row " + std::to_string(r));
  auto& row = rows_[static_cast<std::size_t>(r - 1)];
  const int v = row.back();
  row.pop_back();
  trim();
  return v;
}

int Tableau::pop_left(int r) {
  if (outer(r) == inner(r) || (r > 1 && inner(r) + 1 > inner(r - 1)))
    throw InvalidResult("cannot remove the first cell of row " + std::to_string(r));
  auto& row = rows_[static_cast<std::size_t>(r - 1)];
  const int v = row.front();
  row.erase(row.begin());
  ++inner_[static_cast<std::size_t>(r - 1)];
  return v;
}

bool validate(const Tableau& t, TableauKind kind) {
  for (int r = 1; r <= t.num_rows(); ++r) {
    for (int c = t.inner(r) + 1; c <= t.outer(r); ++c) {
      const int v = t.at({r, c});
      if (v < 1) return false;
      if (t.contains({r, c + 1})) {
        const int right = t.at({r, c + 1});
        if (kind == TableauKind::ssyt ? v > right : v <= right) return false;
      }
      if (t.contains({r + 1, c})) {
        const int above = t.at({r + 1, c});
        if (kind == TableauKind::ssyt ? v >= above : v < above) return false;
      }
    }
  }
  return true;
}

Composition content(const Tableau& t) {
  std::vector<int> counts;
  for (int r = 1; r <= t.num_rows(); ++r)
    for (int v : t.row(r)) {
      if (static_cast<int>(counts.size()) < v) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return Composition(std::move(counts));
}

Composition monomial(const Tableau& t) { return content(t); }

void for_each_ssyt(const SkewShape& shape, int max_entry, const std::function<void(const Tableau&)>& visit) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.outer().length(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape.outer().part(r) - shape.inner().part(r)), 0);
  Tableau t(shape, rows);
  const auto cells = shape.cells();  // bottom row first, left to right

  // Cells stacked contiguously above each cell cap its entry.
  std::vector<int> ceiling(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    int above = 0;
    while (shape.contains({cells[i].row + above + 1, cells[i].col})) ++above;
    ceiling[i] = max_entry - above;
  }

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      visit(t);
      return;
    }
    const Cell c = cells[i];
    int lo = 1;
    if (shape.contains({c.row, c.col - 1})) lo = std::max(lo, t.at({c.row, c.col - 1}));
    if (shape.contains({c.row - 1, c.col})) lo = std::max(lo, t.at({c.row - 1, c.col}) + 1);
    for (int v = lo; v <= ceiling[i]; ++v) {
      t.set(c, v);
      go(i + 1);
    }
  };
  go(0);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

Word reverse_reading_word(const Tableau& t_minus, const Tableau& t_plus) {
  Word w;
  int max_col = 0;
  for (int r = 1; r <= t_minus.num_rows(); ++r) max_col = std::max(max_col, t_minus.outer(r));
  for (int c = max_col; c >= 1; --c)
    for (int r = 1; r <= t_minus.num_rows(); ++r)
      if (t_minus.contains({r, c})) w.push_back(t_minus.at({r, c}));
  for (int r = 1; r <= t_plus.num_rows(); ++r) {
    auto row = t_plus.row(r);
    w.insert(w.end(), row.rbegin(), row.rend());
  }
  return w;
}

Word row_reading_word(const Tableau& t) { return reverse_reading_word(Tableau{}, t); }

bool is_yamanouchi(const Word& w, const Partition& tau) {
  std::vector<int> count(static_cast<std::size_t>(tau.length()) + 2, 0);
  for (int i = 1; i <= tau.length(); ++i) count[static_cast<std::size_t>(i)] = tau.part(i);
  for (int v : w) {
    if (v < 1) return false;
    if (static_cast<int>(count.size()) <= v + 1) count.resize(static_cast<std::size_t>(v) + 2, 0);
    ++count[static_cast<std::size_t>(v)];
    if (v > 1 && count[static_cast<std::size_t>(v)] > count[static_cast<std::size_t>(v - 1)]) return false;
  }
  return true;
}

bool is_lr_filling(const Tableau& t) {
  return validate(t, TableauKind::ssyt) && is_yamanouchi(row_reading_word(t));
}

Tableau star(const Tableau& a, const Tableau& b) {
  const auto placement = star_placement(a.shape(), b.shape());
  const auto& shape = placement.shape;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.outer().length(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape.outer().part(r) - shape.inner().part(r)), 0);
  Tableau out(shape, rows);
  for (const auto& c : a.shape().cells())
    out.set({c.row + placement.a_row_shift, c.col + placement.a_col_shift}, a.at(c));
  for (const auto& c : b.shape().cells())
    out.set({c.row + placement.b_row_shift, c.col + placement.b_col_shift}, b.at(c));
  return out;
}

}  // namespace skewpieri
