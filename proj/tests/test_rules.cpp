#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpieri/errors.hpp"
#include "skewpieri/rules.hpp"
#include "skewpieri/verify.hpp"

using namespace skewpieri;

namespace {

SkewShape sk(Partition outer, Partition inner = {}) { return SkewShape(std::move(outer), std::move(inner)); }

// A pair contributing to s_a s_b whose word is only b.inner-Yamanouchi.
const SkewShape pair_a = sk({7, 5, 4, 1}, {3, 3});
const SkewShape pair_b = sk({7, 5, 5, 4, 3, 1}, {5, 3, 2, 1});
const Tableau pair_minus(sk({3, 3}, {1}), {{3, 2}, {5, 3, 1}});
const Tableau pair_plus(sk({9, 9, 5, 3}, {7, 5, 4, 1}), {{2, 4}, {1, 4, 4, 5}, {3}, {5, 6}});

}  // namespace

TEST_CASE("classical Pieri") {
  SchurExpansion want;
  for (const auto& p : std::vector<Partition>{{3, 2, 2, 2}, {3, 3, 2, 1}, {4, 2, 2, 1}, {4, 3, 2}, {5, 2, 2}}) want.add(p, 1);
  CHECK(pieri({3, 2, 2}, 2) == want);
  CHECK(pieri({}, 4) == schur({4}));
  for (int n = 0; n <= 5; ++n)
    for (const auto& lam : oracle::partitions(n))
      for (int k = 1; k <= 3; ++k) {
        CHECK(pieri(lam, k, true) == omega(pieri(conjugate(lam), k)));
        CHECK(pieri(lam, k) == schur_product(schur(lam), h(k)));
      }
}

TEST_CASE("skew Pieri golden") {
  SkewExpansion want;
  for (const auto& outer : std::vector<Partition>{{3, 2, 2, 2}, {3, 3, 2, 1}, {4, 2, 2, 1}, {4, 3, 2}, {5, 2, 2}})
    want.add(sk(outer, {1, 1}), 1);
  for (const auto& outer : std::vector<Partition>{{3, 2, 2, 1}, {3, 3, 2}, {4, 2, 2}}) want.add(sk(outer, {1}), -1);
  want.add(sk({3, 2, 2}), 1);
  const auto got = skew_pieri(sk({3, 2, 2}, {1, 1}), 2);
  CHECK(syntactically_equal(got, want));
  CHECK(got.size() == 9);
}

TEST_CASE("skew Pieri structure") {
  for (const auto& s : skew_shapes_up_to(5))
    for (int n = 1; n <= 3; ++n) {
      const auto f = skew_pieri(s, n);
      if (s.inner().empty()) {
        SkewExpansion classical;
        const auto plain = pieri(s.outer(), n);
        for (const auto& [p, c] : plain.terms()) classical.add(SkewShape(p), c);
        CHECK(syntactically_equal(f, classical));
      }
      // Strata: sign (-1)^k for |μ/μ⁻| = k; the k = n stratum keeps λ⁺ = λ.
      for (const auto& [t, c] : f.terms()) {
        const int k = s.inner().size() - t.inner().size();
        CHECK(c == (k % 2 == 0 ? 1 : -1));
        if (k == n) CHECK(t.outer() == s.outer());
        if (k == 0) CHECK(t.inner() == s.inner());
      }
      // Dual rule through ω on the conjugate shape.
      CHECK(skew_expansion_to_schur(skew_pieri(s, n, true)) == omega(skew_expansion_to_schur(skew_pieri(conjugate(s), n))));
      CHECK(skew_expansion_to_schur(skew_pieri(s, n, true)) == schur_product(skew_to_schur(s), e(n)));
    }
}

TEST_CASE("skew Pieri at the monomial level with brute force") {
  for (const auto& s : skew_shapes_up_to(4))
    for (int n = 1; n <= 2; ++n) {
      const int vars = std::max(1, s.size() + n);
      const auto lhs = oracle::multiply(oracle::monomials(s, vars), oracle::monomials(sk({n}), vars));
      std::map<std::vector<int>, long long> rhs;
      const auto f = skew_pieri(s, n);
      for (const auto& [t, c] : f.terms())
        oracle::accumulate(rhs, oracle::monomials(t, vars), c.convert_to<long long>());
      CHECK(lhs == rhs);
    }
}

TEST_CASE("pair with a shifted Yamanouchi word") {
  CHECK(is_admissible_pair(pair_a, pair_b, pair_minus, pair_plus));
  const auto w = reverse_reading_word(pair_minus, pair_plus);
  CHECK(is_yamanouchi(w, pair_b.inner()));
  CHECK_FALSE(is_yamanouchi(w));

  // The full pair list for these shapes is too large to hold; the term this
  // pair contributes is read off its two fillings.
  CHECK(pair_minus.cell_count() % 2 == 1);
  CHECK(SkewShape(pair_plus.shape().outer(), pair_minus.shape().inner()) == sk({9, 9, 5, 3}, {1}));

  // Changing one entry breaks admissibility.
  Tableau broken = pair_plus;
  broken.set({1, 9}, 5);
  CHECK_FALSE(is_admissible_pair(pair_a, pair_b, pair_minus, broken));
}

TEST_CASE("pairs match a brute-force filter") {
  // For small a and b, enumerate every pair of fillings and keep the
  // admissible ones; the library's enumeration must list exactly those.
  for (const auto& a : skew_shapes_up_to(3))
    for (const auto& b : skew_shapes_up_to(3)) {
      const auto pairs = skew_lr_pairs(a, b);
      std::set<std::pair<std::map<Cell, int>, std::map<Cell, int>>> got;
      for (const auto& p : pairs) {
        std::map<Cell, int> m, q;
        for (auto c : p.minus.shape().cells()) m[c] = p.minus.at(c);
        for (auto c : p.plus.shape().cells()) q[c] = p.plus.at(c);
        CHECK(got.insert({m, q}).second);
      }
      std::size_t expected = 0;
      const int total = b.size();
      const int letters = std::max(1, b.outer().length());
      for (const auto& mm : subpartitions(a.inner())) {
        const int j = a.inner().size() - mm.size();
        if (j > total) continue;
        for (const auto& lp : superpartitions(a.outer(), total - j)) {
          const SkewShape ms(a.inner(), mm), ps(lp, a.outer());
          const auto mcells = oracle::cells(a.inner(), mm);
          const auto pcells = oracle::cells(lp, a.outer());
          const std::size_t ncells = mcells.size() + pcells.size();
          std::vector<int> vals(ncells, 1);
          while (true) {
            std::vector<std::vector<int>> mrows, prows;
            for (int r = 1; r <= a.inner().length(); ++r) mrows.emplace_back();
            for (int r = 1; r <= lp.length(); ++r) prows.emplace_back();
            std::size_t i = 0;
            for (auto c : mcells) mrows[static_cast<std::size_t>(c.row - 1)].push_back(vals[i++]);
            for (auto c : pcells) prows[static_cast<std::size_t>(c.row - 1)].push_back(vals[i++]);
            const Tableau tm(ms, mrows), tp(ps, prows);
            if (is_admissible_pair(a, b, tm, tp)) ++expected;
            std::size_t d = 0;
            while (d < ncells && vals[d] == letters) vals[d++] = 1;
            if (d == ncells) break;
            ++vals[d];
          }
        }
      }
      CHECK(pairs.size() == expected);
    }
}

TEST_CASE("skew LR degenerations") {
  for (const auto& a : skew_shapes_up_to(4))
    for (int n = 1; n <= 3; ++n) CHECK(syntactically_equal(skew_lr_product(a, sk({n})), skew_pieri(a, n)));
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 3; ++y)
      for (const auto& lam : oracle::partitions(x))
        for (const auto& sigma : oracle::partitions(y))
          CHECK(skew_expansion_to_schur(skew_lr_product(sk(lam), sk(sigma))) == schur_product(schur(lam), schur(sigma)));
}

TEST_CASE("skew LR product equals the Schur product") {
  for (const auto& a : skew_shapes_up_to(4))
    for (const auto& b : skew_shapes_up_to(3))
      CHECK(skew_expansion_to_schur(skew_lr_product(a, b)) == schur_product(skew_to_schur(a), skew_to_schur(b)));
}

TEST_CASE("h rho products") {
  const SkewShape a = sk({2, 1}, {1});
  CHECK(equivalent(skew_h_rho_product(a, {1, 1}), iterated_skew_pieri(a, {1, 1})));
  for (const auto& s : skew_shapes_up_to(4))
    for (int n = 1; n <= 3; ++n) CHECK(syntactically_equal(skew_h_rho_product(s, {n}), skew_pieri(s, n)));
  for (const auto& s : skew_shapes_up_to(4))
    for (int r = 1; r <= 3; ++r)
      for (const auto& rho : oracle::partitions(r)) {
        SchurExpansion product = skew_to_schur(s);
        for (int part : rho.parts()) product = schur_product(product, h(part));
        CHECK(skew_expansion_to_schur(skew_h_rho_product(s, rho)) == product);
      }
}
