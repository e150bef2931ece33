#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpieri/errors.hpp"
#include "skewpieri/insertion.hpp"

using namespace skewpieri;

namespace {

const Tableau before_external(SkewShape(Partition{7, 5, 4, 2}, Partition{3, 1}),
                              {{2, 2, 3, 6}, {1, 2, 3, 4}, {2, 2, 7, 7}, {4, 5}});
const Tableau after_external(SkewShape(Partition{7, 5, 4, 3}, Partition{3, 1}),
                             {{2, 2, 2, 6}, {1, 2, 3, 3}, {2, 2, 4, 7}, {4, 5, 7}});
const Tableau after_internal(SkewShape(Partition{7, 5, 4, 3, 1}, Partition{3, 2}),
                             {{2, 2, 2, 6}, {2, 3, 3}, {1, 2, 4, 7}, {2, 5, 7}, {4}});
const Tableau slide_example(SkewShape(Partition{7, 6, 4, 4, 1}, Partition{3, 1}),
                            {{1, 2, 2, 5}, {1, 2, 2, 3, 6}, {2, 2, 3, 4}, {3, 5, 7, 7}, {9}});

using Path = std::vector<Cell>;

// Every SSYT with at most `cells` cells and entries <= max_entry.
std::vector<Tableau> small_tableaux(int cells, int max_entry) {
  std::vector<Tableau> out;
  for (int n = 0; n <= cells + 2; ++n)
    for (const auto& lam : oracle::partitions(n))
      for (const auto& mu : subpartitions(lam))
        if (SkewShape(lam, mu).size() <= cells)
          for (auto& t : enumerate_ssyt(SkewShape(lam, mu), max_entry)) out.push_back(std::move(t));
  return out;
}

bool path_shape_ok(const BumpRecord& r) {
  for (std::size_t i = 1; i < r.path.size(); ++i)
    if (r.path[i].row != r.path[i - 1].row + 1 || r.path[i].col > r.path[i - 1].col) return false;
  return true;
}

}  // namespace

TEST_CASE("external insertion golden") {
  REQUIRE(validate(before_external, TableauKind::ssyt));
  const auto ins = external_insert(before_external, 2);
  CHECK(ins.tableau == after_external);
  CHECK(ins.record.path == Path{{1, 6}, {2, 5}, {3, 3}, {4, 3}});
  CHECK(ins.record.direction == Direction::forward);
  CHECK(ins.record.landing_row == 0);

  const auto rev = reverse_insert(after_external, {4, 3});
  CHECK(rev.tableau == before_external);
  CHECK(rev.record.final_entry == 2);
  CHECK(rev.record.landing_row == 0);
  CHECK(rev.record.path == ins.record.path);
}

TEST_CASE("internal insertion golden") {
  const auto ins = internal_insert(after_external, 2);
  CHECK(ins.tableau == after_internal);
  CHECK(ins.record.path == Path{{2, 2}, {3, 1}, {4, 1}, {5, 1}});
  CHECK(ins.record.landing_row == 2);

  const auto rev = reverse_insert(after_internal, {5, 1});
  CHECK(rev.tableau == after_external);
  CHECK(rev.record.final_entry == 1);
  CHECK(rev.record.landing_row == 2);
  CHECK(rev.record.path == ins.record.path);
}

TEST_CASE("small insertion cases") {
  const auto one = external_insert(Tableau{}, 5);
  CHECK(one.tableau == Tableau(SkewShape(Partition{1}), {{5}}));
  CHECK(one.record.path == Path{{1, 1}});

  const auto bump = external_insert(Tableau(SkewShape(Partition{2}), {{1, 3}}), 2);
  CHECK(bump.tableau == Tableau(SkewShape(Partition{2, 1}), {{1, 2}, {3}}));

  const Tableau column(SkewShape(Partition{1, 1}), {{1}, {2}});
  CHECK_THROWS_AS(internal_insert(column, 2), NoInsideCorner);
  const auto col = internal_insert(column, 1);
  CHECK(col.tableau == Tableau(SkewShape(Partition{1, 1, 1}, Partition{1}), {{}, {1}, {2}}));
  CHECK(col.record.path == Path{{1, 1}, {2, 1}, {3, 1}});

  CHECK_THROWS_AS(internal_insert(Tableau(SkewShape(Partition{2, 2}), {{1, 1}, {2, 2}}), 2), NoInsideCorner);

  const auto gone = reverse_insert(Tableau(SkewShape(Partition{1}), {{4}}), {1, 1});
  CHECK(gone.tableau.cell_count() == 0);
  CHECK(gone.record.final_entry == 4);
  CHECK(gone.record.landing_row == 0);
}

TEST_CASE("reverse insertion landing inside the tableau") {
  // (4,2) only becomes an outside corner once the strip cells to its right
  // have been reverse inserted, as in a downward slide.
  CHECK_THROWS_AS(reverse_insert(slide_example, {4, 2}), NotOutsideCorner);
  Tableau t = slide_example;
  for (Cell c : {Cell{2, 6}, Cell{4, 4}, Cell{4, 3}}) {
    auto r = reverse_insert(t, c);
    CHECK(r.record.landing_row == 0);
    t = r.tableau;
  }
  const auto r = reverse_insert(t, {4, 2});
  CHECK(r.record.final_entry == 1);
  CHECK(r.record.landing_row == 1);
  CHECK(r.record.path == Path{{1, 3}, {2, 2}, {3, 2}, {4, 2}});
  CHECK(validate(r.tableau, TableauKind::ssyt));
  CHECK(r.tableau.shape() == SkewShape(Partition{7, 5, 4, 1, 1}, Partition{2, 1}));
  CHECK(insert_from(r.tableau, 1, 1).tableau == t);
}

TEST_CASE("round trips") {
  for (const auto& t : small_tableaux(6, 4)) {
    for (int k = 1; k <= 5; ++k) {
      const auto ins = external_insert(t, k);
      REQUIRE(validate(ins.tableau, TableauKind::ssyt));
      CHECK(path_shape_ok(ins.record));
      const auto rev = reverse_insert(ins.tableau, ins.record.path.back());
      CHECK(rev.tableau == t);
      CHECK(rev.record.final_entry == k);
      CHECK(rev.record.landing_row == 0);
      CHECK(rev.record.path == ins.record.path);
    }
    for (int r = 1; r <= t.num_rows(); ++r) {
      const bool inside = t.inner(r) < t.outer(r) && (r == 1 || t.inner(r - 1) >= t.inner(r) + 1);
      Insertion ins;
      try {
        ins = internal_insert(t, r);
      } catch (const NoInsideCorner&) {
        CHECK_FALSE(inside);
        continue;
      }
      CHECK(inside);
      REQUIRE(validate(ins.tableau, TableauKind::ssyt));
      CHECK(path_shape_ok(ins.record));
      const auto rev = reverse_insert(ins.tableau, ins.record.path.back());
      CHECK(rev.tableau == t);
      CHECK(rev.record.landing_row == r);
    }
    for (auto c : corners(t.shape()).outside) {
      Insertion rev;
      try {
        rev = reverse_insert(t, c);
      } catch (const InvalidResult&) {
        continue;
      }
      CHECK(path_shape_ok(rev.record));
      REQUIRE(validate(rev.tableau, TableauKind::ssyt));
      const auto back = insert_from(rev.tableau, rev.record.final_entry, rev.record.landing_row);
      CHECK(back.tableau == t);
    }
  }
}

TEST_CASE("bumping lemma") {
  for (const auto& t : small_tableaux(5, 3))
    for (int k = 1; k <= 4; ++k)
      for (int k2 = 1; k2 <= 4; ++k2) {
        const auto first = external_insert(t, k);
        const auto second = external_insert(first.tableau, k2);
        const auto& b = first.record.path;
        const auto& b2 = second.record.path;
        CHECK(strictly_left_of(b, b2) == (k <= k2));
        // Strict-left in one shared row forces it in all shared rows, and the
        // two top cells then form a horizontal strip.
        bool some = false;
        for (auto c : b)
          for (auto c2 : b2)
            if (c.row == c2.row && c.col < c2.col) some = true;
        if (some) {
          CHECK(strictly_left_of(b, b2));
          CHECK(b.back().col < b2.back().col);
          CHECK(b.back().row >= b2.back().row);
        }
      }
}

TEST_CASE("reverse bumping order") {
  for (const auto& t : small_tableaux(5, 3)) {
    const auto outs = corners(t.shape()).outside;
    for (auto c2 : outs) {
      Insertion first;
      try {
        first = reverse_insert(t, c2);
      } catch (const InvalidResult&) {
        continue;
      }
      for (auto c : corners(first.tableau.shape()).outside) {
        if (!(c.col < c2.col)) continue;
        Insertion second;
        try {
          second = reverse_insert(first.tableau, c);
        } catch (const InvalidResult&) {
          continue;
        }
        CHECK(strictly_left_of(second.record.path, first.record.path));
        if (first.record.landing_row == 0 && second.record.landing_row == 0)
          CHECK(second.record.final_entry <= first.record.final_entry);
      }
    }
  }
}
