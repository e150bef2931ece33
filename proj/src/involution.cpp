#include "skewpieri/involution.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewpieri/errors.hpp"

namespace skewpieri {

void check_context(const SlideContext& ctx) {
  const auto shape = ctx.tableau.shape();
  const auto& lam = ctx.base.outer();
  const auto& mu = ctx.base.inner();
  if (!shape.outer().contains(lam) || !is_strip({shape.outer(), lam}, StripKind::horizontal))
    throw std::invalid_argument("outer shape does not extend the base by a horizontal strip");
  if (!mu.contains(shape.inner()) || !is_strip({mu, shape.inner()}, StripKind::vertical))
    throw std::invalid_argument("inner shape does not shrink the base by a vertical strip");
  if (!validate(ctx.tableau, TableauKind::ssyt)) throw std::invalid_argument("tableau is not semistandard");
}

int inner_strip_size(const SlideContext& ctx) { return ctx.base.inner().size() - ctx.tableau.shape().inner().size(); }

int strip_size(const SlideContext& ctx) {
  return ctx.tableau.shape().outer().size() - ctx.base.outer().size() + inner_strip_size(ctx);
}

std::vector<Cell> outer_strip_cells(const SlideContext& ctx) {
  const SkewShape strip(ctx.tableau.shape().outer(), ctx.base.outer());
  auto cells = strip.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.col > b.col; });
  return cells;
}

std::optional<Cell> bottom_inner_cell(const SlideContext& ctx) {
  const auto& mu = ctx.base.inner();
  for (int r = 1; r <= mu.length(); ++r)
    if (ctx.tableau.inner(r) < mu.part(r)) return Cell{r, ctx.tableau.inner(r) + 1};
  return std::nullopt;
}

namespace {

void record(SlideLog* log, SlideStep::Kind kind, const Insertion& ins) {
  if (log) log->push_back({kind, ins.record, ins.tableau});
}

// Reverse row insertion of the cells of λ⁺/λ from right to left, stopping at
// the first landing in a row >= 1.
struct Reversals {
  Tableau tableau;
  std::vector<int> finals;  // k_1, k_2, ... of the insertions that left the tableau
  std::optional<BumpRecord> landing;
};

Reversals reverse_strip(const SlideContext& ctx, SlideLog* log) {
  Reversals out{ctx.tableau, {}, std::nullopt};
  for (const auto& c : outer_strip_cells(ctx)) {
    auto ins = reverse_insert(out.tableau, c);
    record(log, SlideStep::Kind::reverse, ins);
    out.tableau = std::move(ins.tableau);
    if (ins.record.landing_row >= 1) {
      out.landing = std::move(ins.record);
      break;
    }
    out.finals.push_back(ins.record.final_entry);
  }
  return out;
}

Tableau reinsert(Tableau t, const std::vector<int>& finals, SlideLog* log) {
  for (auto it = finals.rbegin(); it != finals.rend(); ++it) {
    auto ins = external_insert(t, *it);
    record(log, SlideStep::Kind::external, ins);
    t = std::move(ins.tableau);
  }
  return t;
}

}  // namespace

std::optional<BumpRecord> downward_path(const SlideContext& ctx) { return reverse_strip(ctx, nullptr).landing; }

std::optional<BumpRecord> upward_path(const SlideContext& ctx) {
  const auto bottom = bottom_inner_cell(ctx);
  if (!bottom) return std::nullopt;
  return internal_insert(ctx.tableau, bottom->row).record;
}

bool exits_right(const SlideContext& ctx) {
  const auto path = downward_path(ctx);
  if (!path) return false;
  const auto bottom = bottom_inner_cell(ctx);
  if (!bottom) return true;
  return path->path.front().row < bottom->row;
}

SlideContext downward_slide(const SlideContext& ctx, SlideLog* log) {
  auto run = reverse_strip(ctx, log);
  return {ctx.base, reinsert(std::move(run.tableau), run.finals, log)};
}

SlideContext upward_slide(const SlideContext& ctx, SlideLog* log) {
  const auto up = upward_path(ctx);
  if (!up) throw NoUpwardPath("inner shape equals the base inner shape");

  Tableau t = ctx.tableau;
  std::vector<int> finals;
  for (const auto& c : outer_strip_cells(ctx)) {
    auto trial = reverse_insert(t, c);
    // A path that comes to rest at or above the bottom of the upward path
    // lies left of it even when the two share no row.
    const int landing = trial.record.landing_row;
    if (!weakly_right_of(trial.record.path, up->path) || (landing >= 1 && landing >= up->path.front().row)) break;
    record(log, SlideStep::Kind::reverse, trial);
    t = std::move(trial.tableau);
    // A landing leaves k_m inside the tableau, so it is not reinserted.
    if (trial.record.landing_row >= 1) break;
    finals.push_back(trial.record.final_entry);
  }

  const auto bottom = bottom_inner_cell({ctx.base, t});
  if (!bottom) throw InvalidResult("upward slide lost the bottom cell of the inner strip");
  auto ins = internal_insert(t, bottom->row);
  record(log, SlideStep::Kind::internal, ins);
  return {ctx.base, reinsert(std::move(ins.tableau), finals, log)};
}

SlideContext phi(const SlideContext& ctx, SlideLog* log) {
  if (!bottom_inner_cell(ctx) || exits_right(ctx)) return downward_slide(ctx, log);
  return upward_slide(ctx, log);
}

bool is_fixed_point(const SlideContext& ctx) { return !bottom_inner_cell(ctx) && !downward_path(ctx); }

Tableau fixed_point_to_star(const SlideContext& ctx) {
  if (bottom_inner_cell(ctx)) throw NotFixedPoint("inner strip is not empty");
  auto run = reverse_strip(ctx, nullptr);
  if (run.landing) throw NotFixedPoint("a reverse insertion landed inside the tableau");
  std::vector<int> strip(run.finals.rbegin(), run.finals.rend());
  const int n = static_cast<int>(strip.size());
  return star(run.tableau, Tableau(SkewShape(Partition{n}), {strip}));
}

SlideContext star_to_fixed_point(const SkewShape& base, const Tableau& star_tableau) {
  const int n = star_tableau.cell_count() - base.size();
  if (n < 0) throw std::invalid_argument("star tableau is smaller than the base shape");
  const SkewShape row_shape(Partition{n});
  const auto placement = star_placement(base, row_shape);
  if (placement.shape != star_tableau.shape()) throw std::invalid_argument("tableau shape is not base * (n)");

  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= base.outer().length(); ++r) {
    std::vector<int> row;
    for (int c = base.inner().part(r) + 1; c <= base.outer().part(r); ++c)
      row.push_back(star_tableau.at({r + placement.a_row_shift, c + placement.a_col_shift}));
    rows.push_back(std::move(row));
  }
  Tableau t(base, std::move(rows));
  for (int c = 1; c <= n; ++c)
    t = external_insert(t, star_tableau.at({1 + placement.b_row_shift, c + placement.b_col_shift})).tableau;
  return {base, std::move(t)};
}

}  // namespace skewpieri
