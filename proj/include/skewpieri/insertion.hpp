#pragma once

#include <vector>

#include "skewpieri/shapes.hpp"
#include "skewpieri/tableaux.hpp"

namespace skewpieri {

enum class Direction { forward, reverse };

/// Trace of one row insertion or reverse row insertion.
///
/// `path` lists one cell per touched row, bottom row first, including the
/// cell that was created (forward) or deleted (reverse) and the cell that
/// was vacated (internal) or filled at a row's left end (reverse landing).
///
/// Forward: `final_entry` is the inserted entry and `landing_row` the row it
/// was taken from (0 for an external insertion). Reverse: `final_entry` is
/// the entry left at the end and `landing_row` is where it came to rest, 0
/// meaning it left the tableau.
struct BumpRecord {
  std::vector<Cell> path;
  int final_entry = 0;
  int landing_row = 0;
  Direction direction = Direction::forward;

  friend bool operator==(const BumpRecord&, const BumpRecord&) = default;
};

struct Insertion {
  Tableau tableau;
  BumpRecord record;
};

/// T <-_0 k. Total on valid SSYTs.
Insertion external_insert(const Tableau& t, int k);

/// T <-_r k where k is the entry of the leftmost cell of row r. Throws
/// NoInsideCorner unless that cell exists and has no cell below it.
Insertion internal_insert(const Tableau& t, int row);

/// T -> c. Throws NotOutsideCorner unless c is an outside corner; throws
/// InvalidResult if a left-end placement would leave a malformed tableau.
Insertion reverse_insert(const Tableau& t, Cell c);

/// Inverse of a reverse insertion that landed in `landing_row`.
Insertion insert_from(const Tableau& t, int k, int landing_row);

/// True when, in every row both paths occupy, `path` is at a column >= the
/// column of `reference`.
bool weakly_right_of(const std::vector<Cell>& path, const std::vector<Cell>& reference);

/// True when, in every row both paths occupy, `path` is strictly left of
/// `reference`.
bool strictly_left_of(const std::vector<Cell>& path, const std::vector<Cell>& reference);

}  // namespace skewpieri
