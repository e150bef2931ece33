#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "skewpieri/shapes.hpp"

using namespace skewpieri;

namespace {

std::set<Cell> cell_set(const SkewShape& s) {
  auto cs = s.cells();
  return {cs.begin(), cs.end()};
}

}  // namespace

TEST_CASE("partition canonical form") {
  CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2});
  CHECK(Partition{3, 2}.size() == 5);
  CHECK(Partition{3, 2}.part(3) == 0);
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : oracle::partitions(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("is_strip") {
  const SkewShape s(Partition{4, 2, 1}, Partition{2, 1});
  CHECK(is_strip(s, StripKind::horizontal));
  CHECK_FALSE(is_strip(s, StripKind::vertical));  // row 1 holds (1,3) and (1,4)
  const SkewShape empty(Partition{3, 1}, Partition{3, 1});
  CHECK(is_strip(empty, StripKind::horizontal));
  CHECK(is_strip(empty, StripKind::vertical));

  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : oracle::partitions(n))
      for (const auto& mu : subpartitions(lam)) {
        const SkewShape t(lam, mu);
        const auto cs = oracle::cells(lam, mu);
        CHECK(is_strip(t, StripKind::horizontal) == oracle::no_two_share_column(cs));
        CHECK(is_strip(t, StripKind::vertical) == oracle::no_two_share_row(cs));
      }
}

TEST_CASE("outer strips") {
  CHECK(enumerate_outer_strips(Partition{3, 2, 2}, 2, StripKind::horizontal) ==
        std::vector<Partition>{{3, 2, 2, 2}, {3, 3, 2, 1}, {4, 2, 2, 1}, {4, 3, 2}, {5, 2, 2}});
  CHECK(enumerate_outer_strips(Partition{}, 1, StripKind::horizontal) == std::vector<Partition>{{1}});
  CHECK(enumerate_outer_strips(Partition{2, 1}, 0, StripKind::vertical) == std::vector<Partition>{{2, 1}});

  for (int b = 0; b <= 6; ++b)
    for (const auto& base : oracle::partitions(b))
      for (int n = 0; n <= 3; ++n) {
        CHECK(enumerate_outer_strips(base, n, StripKind::horizontal) == oracle::outer_strips(base, n, true));
        CHECK(enumerate_outer_strips(base, n, StripKind::vertical) == oracle::outer_strips(base, n, false));
      }
}

TEST_CASE("inner strips") {
  CHECK(enumerate_inner_strips(Partition{1, 1}, 1, StripKind::vertical) == std::vector<Partition>{{1}});
  CHECK(enumerate_inner_strips(Partition{1, 1}, 2, StripKind::vertical) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_inner_strips(Partition{3, 1}, 2, StripKind::vertical) == oracle::inner_strips({3, 1}, 2, false));

  for (int b = 0; b <= 6; ++b)
    for (const auto& base : oracle::partitions(b))
      for (int k = 0; k <= 3; ++k) {
        CHECK(enumerate_inner_strips(base, k, StripKind::horizontal) == oracle::inner_strips(base, k, true));
        CHECK(enumerate_inner_strips(base, k, StripKind::vertical) == oracle::inner_strips(base, k, false));
      }
}

TEST_CASE("partition enumerators") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    CHECK(static_cast<int>(ps.size()) == counts[n]);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
  }
  const Partition p{3, 2};
  int subs = 0;
  for (int n = 0; n <= p.size(); ++n)
    for (const auto& q : oracle::partitions(n)) subs += oracle::contains(p, q);
  CHECK(static_cast<int>(subpartitions(p).size()) == subs);
  for (const auto& q : superpartitions(p, 3)) {
    CHECK(q.size() == 8);
    CHECK(q.contains(p));
  }
}

TEST_CASE("star") {
  const SkewShape a(Partition{2, 1}, Partition{1});
  const SkewShape row(Partition{2});
  const auto s = star(a, row);
  CHECK(s == SkewShape(Partition{4, 2, 1}, Partition{2, 1}));
  CHECK(translation_equivalent(s, SkewShape(Partition{4, 2, 1}, Partition{2, 1})));
  CHECK_FALSE(translation_equivalent(s, SkewShape(Partition{4, 3, 2}, Partition{2, 2})));

  CHECK(star(SkewShape(Partition{6, 5, 3}, Partition{2, 1}), SkewShape(Partition{3})) ==
        SkewShape(Partition{9, 6, 5, 3}, Partition{6, 2, 1}));
  CHECK(translation_equivalent(star(a, SkewShape{}), a));
  CHECK(translation_equivalent(star(SkewShape{}, a), a));

  // Cells are a disjoint union of translates of the two operands, with a
  // strictly above and left of b.
  for (int n = 0; n <= 4; ++n)
    for (const auto& l1 : oracle::partitions(n))
      for (const auto& m1 : subpartitions(l1))
        for (int k = 0; k <= 3; ++k)
          for (const auto& l2 : oracle::partitions(k))
            for (const auto& m2 : subpartitions(l2)) {
              const SkewShape x(l1, m1), y(l2, m2);
              const auto pl = star_placement(x, y);
              CHECK(pl.shape.size() == x.size() + y.size());
              std::set<Cell> expected;
              for (auto c : x.cells()) expected.insert({c.row + pl.a_row_shift, c.col + pl.a_col_shift});
              for (auto c : y.cells()) CHECK(expected.insert({c.row + pl.b_row_shift, c.col + pl.b_col_shift}).second);
              CHECK(cell_set(pl.shape) == expected);
              if (!x.empty() && !y.empty())
                for (auto cx : x.cells())
                  for (auto cy : y.cells()) {
                    CHECK(cx.row + pl.a_row_shift > cy.row + pl.b_row_shift);
                    CHECK(cx.col + pl.a_col_shift < cy.col + pl.b_col_shift);
                  }
            }
}

TEST_CASE("corners") {
  auto c1 = corners(SkewShape(Partition{1}));
  CHECK(c1.inside == std::vector<Cell>{{1, 1}});
  CHECK(c1.outside == std::vector<Cell>{{1, 1}});
  auto c2 = corners(SkewShape(Partition{2, 2}));
  CHECK(c2.inside == std::vector<Cell>{{1, 1}});
  CHECK(c2.outside == std::vector<Cell>{{2, 2}});
  const SkewShape strip(Partition{4, 2, 1}, Partition{2, 1});
  auto c3 = corners(strip);
  CHECK(c3.inside == std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(c3.outside == std::vector<Cell>{{1, 4}, {2, 2}, {3, 1}});

  // Removal oracle: deleting the cell must leave a pair of partitions.
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : oracle::partitions(n))
      for (const auto& mu : subpartitions(lam)) {
        const SkewShape s(lam, mu);
        const auto cs = corners(s);
        const std::set<Cell> inside(cs.inside.begin(), cs.inside.end());
        const std::set<Cell> outside(cs.outside.begin(), cs.outside.end());
        for (auto c : s.cells()) {
          auto out_parts = std::vector<int>(lam.parts().begin(), lam.parts().end());
          bool out_ok = out_parts[static_cast<std::size_t>(c.row - 1)] == c.col;
          out_parts[static_cast<std::size_t>(c.row - 1)] -= 1;
          out_ok = out_ok && std::is_sorted(out_parts.rbegin(), out_parts.rend());
          CHECK(outside.contains(c) == out_ok);

          auto in_parts = std::vector<int>(mu.parts().begin(), mu.parts().end());
          in_parts.resize(static_cast<std::size_t>(lam.length()), 0);
          bool in_ok = in_parts[static_cast<std::size_t>(c.row - 1)] + 1 == c.col;
          in_parts[static_cast<std::size_t>(c.row - 1)] += 1;
          in_ok = in_ok && std::is_sorted(in_parts.rbegin(), in_parts.rend());
          CHECK(inside.contains(c) == in_ok);
        }
      }
}

TEST_CASE("strip in both directions iff no shared row or column") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& lam : oracle::partitions(n))
      for (const auto& mu : subpartitions(lam)) {
        const SkewShape s(lam, mu);
        const auto cs = oracle::cells(lam, mu);
        CHECK((is_strip(s, StripKind::horizontal) && is_strip(s, StripKind::vertical)) ==
              (oracle::no_two_share_column(cs) && oracle::no_two_share_row(cs)));
      }
}
