#include "skewpieri/insertion.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "skewpieri/errors.hpp"

namespace skewpieri {
namespace {

std::string describe(Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; }

// Bumps k upward starting at `row` until an entry comes to rest at the right
// end of some row.
void bump_upward(Tableau& t, int k, int row, std::vector<Cell>& path) {
  for (int r = row;; ++r) {
    auto entries = t.row(r);
    const auto it = std::upper_bound(entries.begin(), entries.end(), k);
    if (it == entries.end()) {
      const Cell c{r, t.outer(r) + 1};
      if (t.contains({r - 1, c.col}) && t.at({r - 1, c.col}) >= k)
        throw InvalidResult("row insertion broke column strictness at " + describe(c));
      t.push_right(r, k);
      path.push_back(c);
      return;
    }
    const Cell c{r, t.inner(r) + 1 + static_cast<int>(it - entries.begin())};
    const int bumped = *it;
    t.set(c, k);
    path.push_back(c);
    k = bumped;
  }
}

}  // namespace

Insertion external_insert(const Tableau& t, int k) {
  Insertion out{t, {{}, k, 0, Direction::forward}};
  bump_upward(out.tableau, k, 1, out.record.path);
  return out;
}

Insertion internal_insert(const Tableau& t, int row) {
  const Cell c{row, t.inner(row) + 1};
  if (row < 1 || !t.contains(c) || t.contains({row - 1, c.col}))
    throw NoInsideCorner("row " + std::to_string(row) + " has no inside corner at its left end");
  Insertion out{t, {{c}, t.at(c), row, Direction::forward}};
  const int k = out.tableau.pop_left(row);
  bump_upward(out.tableau, k, row + 1, out.record.path);
  return out;
}

Insertion insert_from(const Tableau& t, int k, int landing_row) {
  if (landing_row == 0) return external_insert(t, k);
  return internal_insert(t, landing_row);
}

Insertion reverse_insert(const Tableau& t, Cell c) {
  if (!t.contains(c) || t.contains({c.row, c.col + 1}) || t.contains({c.row + 1, c.col}))
    throw NotOutsideCorner(describe(c) + " is not an outside corner");

  Insertion out{t, {{}, 0, 0, Direction::reverse}};
  Tableau& s = out.tableau;
  std::vector<Cell> path{c};
  int k = s.pop_right(c.row);

  int r = c.row - 1;
  for (; r >= 1; --r) {
    auto entries = s.row(r);
    const auto it = std::lower_bound(entries.begin(), entries.end(), k);
    if (it == entries.begin()) {
      const Cell landing{r, s.inner(r)};
      if (landing.col < 1) throw InvalidResult("reverse insertion has no room left of row " + std::to_string(r));
      if (s.contains({r + 1, landing.col}) && s.at({r + 1, landing.col}) <= k)
        throw InvalidResult("reverse insertion broke column strictness at " + describe(landing));
      if (s.contains({r - 1, landing.col}) && s.at({r - 1, landing.col}) >= k)
        throw InvalidResult("reverse insertion broke column strictness at " + describe(landing));
      s.push_left(r, k);
      path.push_back(landing);
      break;
    }
    const Cell bumped{r, s.inner(r) + static_cast<int>(it - entries.begin())};
    const int next = s.at(bumped);
    s.set(bumped, k);
    path.push_back(bumped);
    k = next;
  }

  std::reverse(path.begin(), path.end());
  out.record.path = std::move(path);
  out.record.final_entry = k;
  out.record.landing_row = std::max(r, 0);
  return out;
}

namespace {

std::optional<int> column_in_row(const std::vector<Cell>& path, int row) {
  for (const auto& c : path)
    if (c.row == row) return c.col;
  return std::nullopt;
}

}  // namespace

bool weakly_right_of(const std::vector<Cell>& path, const std::vector<Cell>& reference) {
  for (const auto& c : path)
    if (auto col = column_in_row(reference, c.row); col && c.col < *col) return false;
  return true;
}

bool strictly_left_of(const std::vector<Cell>& path, const std::vector<Cell>& reference) {
  for (const auto& c : path)
    if (auto col = column_in_row(reference, c.row); col && c.col >= *col) return false;
  return true;
}

}  // namespace skewpieri
