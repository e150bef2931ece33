#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewpieri/insertion.hpp"
#include "skewpieri/shapes.hpp"
#include "skewpieri/tableaux.hpp"

namespace skewpieri {

/// An SSYT of shape λ⁺/μ⁻ together with the base shape λ/μ it was grown
/// from: λ⁺/λ is a horizontal strip and μ/μ⁻ a vertical strip.
struct SlideContext {
  SkewShape base;
  Tableau tableau;

  friend bool operator==(const SlideContext&, const SlideContext&) = default;
};

/// Throws std::invalid_argument when the strip or SSYT conditions fail.
void check_context(const SlideContext& ctx);

/// |λ⁺/λ| + |μ/μ⁻|.
int strip_size(const SlideContext& ctx);
/// |μ/μ⁻|; the sign of the context is (-1) to this power.
int inner_strip_size(const SlideContext& ctx);

/// Cells of λ⁺/λ, rightmost first.
std::vector<Cell> outer_strip_cells(const SlideContext& ctx);
/// The lowest cell of μ/μ⁻, if any.
std::optional<Cell> bottom_inner_cell(const SlideContext& ctx);

/// One insertion performed while sliding.
struct SlideStep {
  enum class Kind { reverse, external, internal } kind;
  BumpRecord record;
  Tableau after;
};

using SlideLog = std::vector<SlideStep>;

/// Reverse bumping path of the first reverse insertion of λ⁺/λ (taken right
/// to left) that lands in a row >= 1.
std::optional<BumpRecord> downward_path(const SlideContext& ctx);

/// Bumping path of internally inserting the bottom cell of μ/μ⁻.
std::optional<BumpRecord> upward_path(const SlideContext& ctx);

/// Whether the downward path bottoms out strictly below the bottom cell of
/// μ/μ⁻. True when μ⁻ = μ; false when there is no downward path.
bool exits_right(const SlideContext& ctx);

SlideContext downward_slide(const SlideContext& ctx, SlideLog* log = nullptr);

/// Throws NoUpwardPath when μ⁻ = μ.
SlideContext upward_slide(const SlideContext& ctx, SlideLog* log = nullptr);

/// The sign-reversing involution: D when there is no upward path or the
/// downward path exits right, U otherwise.
SlideContext phi(const SlideContext& ctx, SlideLog* log = nullptr);

bool is_fixed_point(const SlideContext& ctx);

/// Sends a fixed point of phi to the SSYT of shape (λ/μ) * (n) built from the
/// residual λ/μ filling and the row of final entries. Throws NotFixedPoint.
Tableau fixed_point_to_star(const SlideContext& ctx);

/// Inverse of fixed_point_to_star; n is |star| - |base|.
SlideContext star_to_fixed_point(const SkewShape& base, const Tableau& star_tableau);

}  // namespace skewpieri
