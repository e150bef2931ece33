#include "skewpieri/symfunc.hpp"

#include <algorithm>

#include "skewpieri/errors.hpp"

namespace skewpieri {

SchurExpansion h(int n) { return n < 0 ? SchurExpansion{} : schur(Partition{n}); }

SchurExpansion e(int n) {
  if (n < 0) return {};
  return schur(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

SchurExpansion omega(const SchurExpansion& f) {
  SchurExpansion out;
  for (const auto& [p, c] : f.terms()) out.add(conjugate(p), c);
  return out;
}

int degree(const SchurExpansion& f) {
  int d = -1;
  for (const auto& [p, c] : f.terms()) d = std::max(d, p.size());
  return d;
}

namespace {

// Backtracking over LR fillings of a skew shape. Cells are visited in
// reading order (bottom row first, right to left within a row), so the
// lattice condition can be checked letter by letter.
class LrFillings {
 public:
  LrFillings(const SkewShape& shape, const Partition* target) : shape_(shape), target_(target) {
    const int rows = shape.outer().length() + 1;
    const int cols = shape.outer().part(1) + 2;
    grid_.assign(static_cast<std::size_t>(rows + 1), std::vector<int>(static_cast<std::size_t>(cols + 1), 0));
    for (int r = 1; r <= shape.outer().length(); ++r)
      for (int c = shape.outer().part(r); c > shape.inner().part(r); --c) cells_.push_back({r, c});
    count_.assign(cells_.size() + 2, 0);
  }

  template <class Visit>
  void run(Visit&& visit) {
    go(0, visit);
  }

  Partition content() const {
    std::vector<int> parts;
    for (std::size_t v = 1; v < count_.size() && count_[v] > 0; ++v) parts.push_back(count_[v]);
    return Partition(std::move(parts));
  }

 private:
  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  template <class Visit>
  void go(std::size_t i, Visit& visit) {
    if (i == cells_.size()) {
      visit(*this);
      return;
    }
    const Cell cell = cells_[i];
    std::size_t used = 1;
    while (count_[used] > 0) ++used;
    int hi = static_cast<int>(used);
    if (target_) hi = std::min(hi, target_->length());
    if (shape_.contains({cell.row, cell.col + 1})) hi = std::min(hi, at(cell.row, cell.col + 1));
    int lo = 1;
    if (shape_.contains({cell.row - 1, cell.col})) lo = at(cell.row - 1, cell.col) + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto idx = static_cast<std::size_t>(v);
      if (v > 1 && count_[idx - 1] <= count_[idx]) continue;
      if (target_ && count_[idx] >= target_->part(v)) continue;
      at(cell.row, cell.col) = v;
      ++count_[idx];
      go(i + 1, visit);
      --count_[idx];
    }
    at(cell.row, cell.col) = 0;
  }

  SkewShape shape_;
  const Partition* target_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> count_;
};

}  // namespace

Integer lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu) {
  if (!nu.contains(lam) || !nu.contains(mu) || nu.size() != lam.size() + mu.size()) return 0;
  std::uint64_t n = 0;
  LrFillings(SkewShape(nu, lam), &mu).run([&](const LrFillings&) { ++n; });
  return n;
}

SchurExpansion skew_to_schur(const SkewShape& s) {
  std::map<Partition, std::uint64_t> counts;
  LrFillings(s, nullptr).run([&](const LrFillings& f) { ++counts[f.content()]; });
  SchurExpansion out;
  for (const auto& [p, n] : counts) out.add(p, Integer(n));
  return out;
}

SchurExpansion skew_expansion_to_schur(const SkewExpansion& f) {
  SchurExpansion out;
  for (const auto& [s, c] : f.terms()) out += skew_to_schur(s) * c;
  return out;
}

bool equivalent(const SkewExpansion& a, const SkewExpansion& b) {
  return skew_expansion_to_schur(a) == skew_expansion_to_schur(b);
}

SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g) {
  SchurExpansion out;
  for (const auto& [alpha, a] : f.terms())
    for (const auto& [beta, b] : g.terms())
      for (const auto& nu : superpartitions(alpha, beta.size())) {
        if (!nu.contains(beta)) continue;
        const Integer c = lr_coefficient(nu, alpha, beta);
        if (c != 0) out.add(nu, a * b * c);
      }
  return out;
}

Integer hall_inner(const SchurExpansion& f, const SchurExpansion& g) {
  Integer total = 0;
  for (const auto& [p, c] : f.terms()) total += c * g.coefficient(p);
  return total;
}

SchurExpansion perp(const SchurExpansion& f, const SchurExpansion& g) {
  SchurExpansion out;
  for (const auto& [alpha, a] : f.terms())
    for (const auto& [beta, b] : g.terms()) {
      if (alpha.size() > beta.size() || !beta.contains(alpha)) continue;
      // <s_β, s_α s_ν> for every ν of the complementary degree.
      for (const auto& nu : partitions_of(beta.size() - alpha.size())) {
        const Integer c = lr_coefficient(beta, alpha, nu);
        if (c != 0) out.add(nu, a * b * c);
      }
    }
  return out;
}

MonomialExpansion monomial_expansion(const SkewShape& s, int num_vars) {
  MonomialExpansion out;
  for_each_ssyt(s, num_vars, [&](const Tableau& t) { out[content(t)] += 1; });
  return out;
}

MonomialExpansion monomial_expansion(const SchurExpansion& f, int num_vars) {
  MonomialExpansion out;
  for (const auto& [p, c] : f.terms())
    for (const auto& [m, k] : monomial_expansion(SkewShape(p), num_vars)) out[m] += c * k;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

MonomialExpansion monomial_product(const MonomialExpansion& a, const MonomialExpansion& b) {
  MonomialExpansion out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      std::vector<int> sum(std::max(x.counts.size(), y.counts.size()), 0);
      for (std::size_t i = 0; i < x.counts.size(); ++i) sum[i] += x.counts[i];
      for (std::size_t i = 0; i < y.counts.size(); ++i) sum[i] += y.counts[i];
      out[Composition(std::move(sum))] += cx * cy;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SchurExpansion schur_from_monomials(const MonomialExpansion& m, int num_vars) {
  MonomialExpansion rest = m;
  std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
  SchurExpansion out;
  for (std::size_t step = 0; !rest.empty(); ++step) {
    if (step > 1'000'000) throw NotSymmetric("monomial peeling did not terminate");
    const auto [lead, coeff] = *rest.rbegin();
    if (!lead.is_partition()) throw NotSymmetric("leading exponent is not a partition");
    const Partition p(lead.counts);
    out.add(p, coeff);
    for (const auto& [mono, k] : monomial_expansion(SkewShape(p), num_vars)) {
      auto& slot = rest[mono];
      slot -= coeff * k;
      if (slot == 0) rest.erase(mono);
    }
    if (rest.contains(lead)) throw NotSymmetric("leading exponent survived its own subtraction");
  }
  return out;
}

AppendixCheck verify_appendix(const SchurExpansion& f, const SchurExpansion& g, int n) {
  AppendixCheck out;

  SchurExpansion rhs;
  for (int k = 0; k <= n; ++k) {
    auto term = perp(h(n - k), schur_product(perp(e(k), f), g));
    rhs += k % 2 == 0 ? term : -term;
  }
  if (!(schur_product(f, perp(h(n), g)) == rhs)) out.failures.push_back("f h_n^perp(g) expansion");

  SchurExpansion eh;
  for (int i = 0; i <= n; ++i) {
    auto term = schur_product(e(i), h(n - i));
    eh += i % 2 == 0 ? term : -term;
  }
  if (n >= 1 && !eh.is_zero()) out.failures.push_back("alternating e h sum");

  SchurExpansion coproduct;
  for (int i = 0; i <= n; ++i) coproduct += schur_product(perp(h(n - i), f), perp(h(i), g));
  if (!(perp(h(n), schur_product(f, g)) == coproduct)) out.failures.push_back("h_n^perp of a product");

  const auto fg = schur_product(f, g);
  const int top = std::max(0, degree(f)) + std::max(0, degree(g));
  bool homomorphism = true;
  for (int d = 0; d <= top && homomorphism; ++d)
    for (const auto& p : partitions_of(d))
      if (!(perp(fg, schur(p)) == perp(f, perp(g, schur(p))))) {
        homomorphism = false;
        break;
      }
  if (!homomorphism) out.failures.push_back("perp is multiplicative");
  return out;
}

}  // namespace skewpieri
