#pragma once

#include <vector>

#include "skewpieri/shapes.hpp"
#include "skewpieri/symfunc.hpp"
#include "skewpieri/tableaux.hpp"

namespace skewpieri {

/// s_λ h_n (or s_λ e_n when `dual`): Σ s_{λ⁺} over n-cell horizontal
/// (vertical) strips λ⁺/λ.
SchurExpansion pieri(const Partition& lam, int n, bool dual = false);

/// s_{λ/μ} h_n as Σ_k (-1)^k Σ s_{λ⁺/μ⁻} with λ⁺/λ an (n-k)-horizontal strip
/// and μ/μ⁻ a k-vertical strip. With `dual`, s_{λ/μ} e_n and the strip
/// directions swap.
SkewExpansion skew_pieri(const SkewShape& s, int n, bool dual = false);

/// One (T⁻, T⁺) pair contributing sign * s_{λ⁺/μ⁻} to a skew product.
/// T⁻ is an anti-semistandard filling of μ/μ⁻ and T⁺ an SSYT of λ⁺/λ.
struct SignedPair {
  Tableau minus;
  Tableau plus;
  int sign = 1;
  SkewShape shape;  // λ⁺/μ⁻
};

/// All pairs for s_a s_b: combined content b.outer - b.inner and a reading
/// word that is b.inner-Yamanouchi.
std::vector<SignedPair> skew_lr_pairs(const SkewShape& a, const SkewShape& b);

/// s_a s_b expanded over skew shapes λ⁺/μ⁻, coefficients aggregated per shape.
/// Throws InvalidDifference if b.outer - b.inner has a negative part.
SkewExpansion skew_lr_product(const SkewShape& a, const SkewShape& b);

/// Checks one candidate pair for s_a s_b: shapes, fillings, content and the
/// Yamanouchi condition.
bool is_admissible_pair(const SkewShape& a, const SkewShape& b, const Tableau& minus, const Tableau& plus);

/// All pairs with combined content ρ and no Yamanouchi condition.
std::vector<SignedPair> skew_h_rho_pairs(const SkewShape& a, const Partition& rho);

/// s_a h_ρ via signed (T⁻, T⁺) pairs of combined content ρ.
SkewExpansion skew_h_rho_product(const SkewShape& a, const Partition& rho);

/// s_a h_{ρ_1} h_{ρ_2} ... by applying skew_pieri once per part.
SkewExpansion iterated_skew_pieri(const SkewShape& a, const Partition& rho);

}  // namespace skewpieri
