#include "skewpieri/rules.hpp"

#include <algorithm>

#include "skewpieri/errors.hpp"

namespace skewpieri {

SchurExpansion pieri(const Partition& lam, int n, bool dual) {
  SchurExpansion out;
  for (const auto& p : enumerate_outer_strips(lam, n, dual ? StripKind::vertical : StripKind::horizontal))
    out.add(p, 1);
  return out;
}

SkewExpansion skew_pieri(const SkewShape& s, int n, bool dual) {
  const auto outer_kind = dual ? StripKind::vertical : StripKind::horizontal;
  const auto inner_kind = dual ? StripKind::horizontal : StripKind::vertical;
  SkewExpansion out;
  for (int k = 0; k <= n; ++k) {
    const Integer sign = k % 2 == 0 ? 1 : -1;
    for (const auto& lam_plus : enumerate_outer_strips(s.outer(), n - k, outer_kind))
      for (const auto& mu_minus : enumerate_inner_strips(s.inner(), k, inner_kind))
        out.add(SkewShape(lam_plus, mu_minus), sign);
  }
  return out;
}

namespace {

Tableau blank(const SkewShape& shape) {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= shape.outer().length(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape.outer().part(r) - shape.inner().part(r)), 0);
  return Tableau(shape, std::move(rows));
}

// Enumerates (T⁻, T⁺) pairs over every μ⁻ ⊆ μ and λ⁺ ⊇ λ whose combined
// content is `target`. Cells are filled in reverse reading order so the
// Yamanouchi condition (skipped when `tau` is null) is checked incrementally.
class PairEnumerator {
 public:
  PairEnumerator(const SkewShape& a, std::vector<int> target, const Partition* tau)
      : a_(a), target_(std::move(target)), tau_(tau) {}

  std::vector<SignedPair> run() {
    int total = 0;
    for (int t : target_) total += t;
    for (const auto& mu_minus : subpartitions(a_.inner())) {
      const int j = a_.inner().size() - mu_minus.size();
      if (j > total) continue;
      for (const auto& lam_plus : superpartitions(a_.outer(), total - j)) fill(mu_minus, lam_plus, j);
    }
    return std::move(out_);
  }

 private:
  struct Slot {
    Tableau* t;
    Cell cell;
    bool minus;
  };

  void fill(const Partition& mu_minus, const Partition& lam_plus, int j) {
    const SkewShape minus_shape(a_.inner(), mu_minus);
    const SkewShape plus_shape(lam_plus, a_.outer());
    minus_ = blank(minus_shape);
    plus_ = blank(plus_shape);

    slots_.clear();
    for (int c = a_.inner().part(1); c >= 1; --c)
      for (int r = 1; r <= a_.inner().length(); ++r)
        if (minus_.contains({r, c})) slots_.push_back({&minus_, {r, c}, true});
    for (int r = 1; r <= lam_plus.length(); ++r)
      for (int c = lam_plus.part(r); c > a_.outer().part(r); --c) slots_.push_back({&plus_, {r, c}, false});

    count_.assign(target_.size() + 2, 0);
    if (tau_)
      for (int i = 1; i <= tau_->length() && i <= static_cast<int>(target_.size()) + 1; ++i)
        count_[static_cast<std::size_t>(i)] = tau_->part(i);
    used_.assign(target_.size() + 1, 0);
    sign_ = j % 2 == 0 ? 1 : -1;
    shape_ = SkewShape(lam_plus, mu_minus);
    go(0);
  }

  void go(std::size_t i) {
    if (i == slots_.size()) {
      out_.push_back({minus_, plus_, sign_, shape_});
      return;
    }
    const auto& slot = slots_[i];
    const Tableau& t = *slot.t;
    const Cell c = slot.cell;
    int lo = 1;
    int hi = static_cast<int>(target_.size());
    if (slot.minus) {
      if (t.contains({c.row, c.col + 1})) lo = std::max(lo, t.at({c.row, c.col + 1}) + 1);
      if (t.contains({c.row - 1, c.col})) hi = std::min(hi, t.at({c.row - 1, c.col}));
    } else {
      if (t.contains({c.row, c.col + 1})) hi = std::min(hi, t.at({c.row, c.col + 1}));
      if (t.contains({c.row - 1, c.col})) lo = std::max(lo, t.at({c.row - 1, c.col}) + 1);
    }
    for (int v = lo; v <= hi; ++v) {
      const auto idx = static_cast<std::size_t>(v);
      if (used_[idx - 1] >= target_[idx - 1]) continue;
      if (tau_ && v > 1 && count_[idx - 1] <= count_[idx]) continue;
      slot.t->set(c, v);
      ++used_[idx - 1];
      ++count_[idx];
      go(i + 1);
      --used_[idx - 1];
      --count_[idx];
    }
  }

  SkewShape a_;
  std::vector<int> target_;  // target_[i] = wanted number of entries i + 1
  const Partition* tau_;

  Tableau minus_;
  Tableau plus_;
  std::vector<Slot> slots_;
  std::vector<int> count_;  // letter counts including the tau prefix, 1-based
  std::vector<int> used_;
  int sign_ = 1;
  SkewShape shape_;
  std::vector<SignedPair> out_;
};

std::vector<int> difference(const SkewShape& b) {
  std::vector<int> diff;
  for (int i = 1; i <= b.outer().length(); ++i) {
    const int d = b.outer().part(i) - b.inner().part(i);
    if (d < 0) throw InvalidDifference("outer minus inner has a negative part");
    diff.push_back(d);
  }
  while (!diff.empty() && diff.back() == 0) diff.pop_back();
  return diff;
}

SkewExpansion aggregate(const std::vector<SignedPair>& pairs) {
  SkewExpansion out;
  for (const auto& p : pairs) out.add(p.shape, p.sign);
  return out;
}

}  // namespace

std::vector<SignedPair> skew_lr_pairs(const SkewShape& a, const SkewShape& b) {
  return PairEnumerator(a, difference(b), &b.inner()).run();
}

SkewExpansion skew_lr_product(const SkewShape& a, const SkewShape& b) { return aggregate(skew_lr_pairs(a, b)); }

bool is_admissible_pair(const SkewShape& a, const SkewShape& b, const Tableau& minus, const Tableau& plus) {
  const auto ms = minus.shape();
  const auto ps = plus.shape();
  if (minus.cell_count() > 0 && ms.outer() != a.inner()) return false;
  if (!a.inner().contains(ms.inner())) return false;
  if (plus.cell_count() > 0 && ps.inner() != a.outer()) return false;
  if (!ps.outer().contains(a.outer())) return false;
  if (!validate(minus, TableauKind::assyt) || !validate(plus, TableauKind::ssyt)) return false;

  std::vector<int> combined = content(minus).counts;
  const auto plus_content = content(plus).counts;
  if (combined.size() < plus_content.size()) combined.resize(plus_content.size(), 0);
  for (std::size_t i = 0; i < plus_content.size(); ++i) combined[i] += plus_content[i];
  if (Composition(combined) != Composition(difference(b))) return false;
  return is_yamanouchi(reverse_reading_word(minus, plus), b.inner());
}

std::vector<SignedPair> skew_h_rho_pairs(const SkewShape& a, const Partition& rho) {
  return PairEnumerator(a, std::vector<int>(rho.parts().begin(), rho.parts().end()), nullptr).run();
}

SkewExpansion skew_h_rho_product(const SkewShape& a, const Partition& rho) {
  return aggregate(skew_h_rho_pairs(a, rho));
}

SkewExpansion iterated_skew_pieri(const SkewShape& a, const Partition& rho) {
  auto current = SkewExpansion::term(a);
  for (int part : rho.parts()) {
    SkewExpansion next;
    for (const auto& [shape, coeff] : current.terms()) next += skew_pieri(shape, part) * coeff;
    current = std::move(next);
  }
  return current;
}

}  // namespace skewpieri
