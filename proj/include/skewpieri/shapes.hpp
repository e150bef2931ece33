#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace skewpieri {

/// A cell of a Young diagram in French coordinates: rows count upward from
/// 1, columns count rightward from 1.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive integers. Stored without trailing
/// zeros; `part(i)` is 0 for every i past the length.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument if the input
  /// is not weakly decreasing or holds a negative part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// 1-based; returns 0 beyond the length.
  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  std::span<const int> parts() const noexcept { return parts_; }

  bool contains(const Partition& other) const noexcept;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

enum class StripKind { horizontal, vertical };

/// The cells of `outer` not in `inner`. Equality is on the pair, not on the
/// cell set up to translation.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws std::invalid_argument unless inner ⊆ outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }

  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool empty() const noexcept { return size() == 0; }
  bool contains(Cell c) const noexcept {
    return c.row >= 1 && c.col > inner_.part(c.row) && c.col <= outer_.part(c.row);
  }

  /// Cells ordered by row, then column.
  std::vector<Cell> cells() const;

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& p);
SkewShape conjugate(const SkewShape& s);

bool is_strip(const SkewShape& s, StripKind kind);

/// All λ⁺ ⊇ base with λ⁺/base a strip of `kind` and exactly n cells, in
/// lexicographic order.
std::vector<Partition> enumerate_outer_strips(const Partition& base, int n, StripKind kind);

/// All μ⁻ ⊆ base with base/μ⁻ a strip of `kind` and exactly k cells, in
/// lexicographic order.
std::vector<Partition> enumerate_inner_strips(const Partition& base, int k, StripKind kind);

/// Every partition of n, lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Every partition contained in `p` (including ∅ and p itself).
std::vector<Partition> subpartitions(const Partition& p);

/// Every partition of |base| + n containing `base`.
std::vector<Partition> superpartitions(const Partition& base, int n);

/// Translation offsets used when two shapes are glued by `star`.
struct StarPlacement {
  SkewShape shape;
  int a_row_shift = 0;  // cell (r, c) of a lands at (r + a_row_shift, c + a_col_shift)
  int a_col_shift = 0;
  int b_row_shift = 0;
  int b_col_shift = 0;
};

/// Places `a` so that its bottom-right cell sits immediately above and to
/// the left of the top-left cell of `b`.
StarPlacement star_placement(const SkewShape& a, const SkewShape& b);
SkewShape star(const SkewShape& a, const SkewShape& b);

/// True when the two cell sets agree after a translation.
bool translation_equivalent(const SkewShape& a, const SkewShape& b);

struct Corners {
  std::vector<Cell> inside;   // no cell below or to the left
  std::vector<Cell> outside;  // no cell above or to the right
};

Corners corners(const SkewShape& s);

}  // namespace skewpieri
