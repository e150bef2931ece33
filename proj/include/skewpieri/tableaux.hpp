#pragma once

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "skewpieri/shapes.hpp"

namespace skewpieri {

/// Entry multiplicities: counts[i] is the number of entries equal to i + 1.
/// Trailing zeros are trimmed.
struct Composition {
  std::vector<int> counts;

  Composition() = default;
  explicit Composition(std::vector<int> c);

  int at(int i) const noexcept {  // 1-based, 0 beyond the end
    return i >= 1 && i <= static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(i - 1)] : 0;
  }
  int size() const noexcept;
  bool is_partition() const noexcept;

  friend auto operator<=>(const Composition&, const Composition&) = default;
};

using Word = std::vector<int>;

enum class TableauKind { ssyt, assyt };

/// A filling of a skew shape. Row r holds the entries of columns
/// inner_r + 1 .. outer_r, left to right. Rows are 1-based and count upward.
///
/// The mutators keep the underlying shape a valid skew shape but do not
/// check row/column order; use `validate` for that.
class Tableau {
 public:
  Tableau() = default;
  /// Throws std::invalid_argument if a row length disagrees with the shape.
  Tableau(const SkewShape& shape, std::vector<std::vector<int>> rows);
  /// A tableau with no cells whose inner and outer shape are both `p`.
  static Tableau empty_on(const Partition& p);

  SkewShape shape() const;
  int num_rows() const noexcept { return static_cast<int>(rows_.size()); }
  int inner(int r) const noexcept;
  int outer(int r) const noexcept;
  std::span<const int> row(int r) const noexcept;
  int cell_count() const noexcept;

  bool contains(Cell c) const noexcept { return c.row >= 1 && c.col > inner(c.row) && c.col <= outer(c.row); }
  /// Precondition: contains(c).
  int at(Cell c) const;
  void set(Cell c, int value);

  /// Adds a cell at column outer(r) + 1.
  void push_right(int r, int value);
  /// Adds a cell at column inner(r); requires inner(r) >= 1.
  void push_left(int r, int value);
  int pop_right(int r);
  int pop_left(int r);

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  void ensure_row(int r);
  void trim();

  std::vector<int> inner_;
  std::vector<std::vector<int>> rows_;
};

bool validate(const Tableau& t, TableauKind kind);

Composition content(const Tableau& t);
/// Exponent vector of x^T; identical to the content.
Composition monomial(const Tableau& t);

/// Calls `visit` for every SSYT of `shape` with entries in 1..max_entry, in
/// lexicographic order of the bottom-to-top row concatenation.
void for_each_ssyt(const SkewShape& shape, int max_entry, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

/// Columns of `t_minus` bottom-to-top starting from the rightmost column, then
/// rows of `t_plus` right-to-left starting from the bottom row.
Word reverse_reading_word(const Tableau& t_minus, const Tableau& t_plus);

/// Rows right-to-left, bottom row first.
Word row_reading_word(const Tableau& t);

/// Yamanouchi after prefixing tau_1 ones, tau_2 twos, and so on.
bool is_yamanouchi(const Word& w, const Partition& tau = {});

bool is_lr_filling(const Tableau& t);

/// Glues two tableaux along `star_placement` of their shapes.
Tableau star(const Tableau& a, const Tableau& b);

}  // namespace skewpieri
