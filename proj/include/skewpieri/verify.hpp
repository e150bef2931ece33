#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewpieri/shapes.hpp"

namespace skewpieri {

struct CaseResult {
  std::string name;
  bool passed = true;
  double seconds = 0.0;
  std::string counterexample;  // empty when passed
};

struct Report {
  std::string check;
  std::vector<CaseResult> cases;
  double seconds = 0.0;

  bool passed() const noexcept;
  std::size_t failures() const noexcept;
  const CaseResult* first_failure() const noexcept;
};

/// Every skew shape λ/μ with |λ| <= max_outer, ordered by (λ, μ).
std::vector<SkewShape> skew_shapes_up_to(int max_outer);

/// Every partition of size at most `max_size`.
std::vector<Partition> partitions_up_to(int max_size);

struct SkewPieriOptions {
  int max_outer = 5;
  int max_n = 2;
  /// Monomial-level comparison only for |λ| up to this bound; -1 means max_outer.
  int monomial_max_outer = -1;
  /// Involution accounting with entries up to this bound; 0 skips it.
  int max_entry = 0;
};

/// For each λ/μ and 1 <= n <= max_n: the skew Pieri expansion equals
/// s_{λ/μ} h_n in the Schur basis, and at the monomial level in |λ/μ| + n
/// variables; optionally the involution accounting of `check_involution_case`.
Report verify_skew_pieri(const SkewPieriOptions& options);

/// Runs phi over every SSYT (entries <= max_entry) of every shape λ⁺/μ⁻ grown
/// from `base` by n cells. Checks phi∘phi = id, the sign flip off fixed points,
/// content preservation, and that fixed points biject onto the SSYTs of
/// base * (n). Returns a description of the first violation.
std::optional<std::string> check_involution_case(const SkewShape& base, int n, int max_entry);

Report verify_involution(int max_outer, int max_n, int max_entry);

/// verify_appendix for all f = s_α, g = s_β with |α|, |β| <= max_deg and
/// 1 <= n <= max_n.
Report verify_appendix_sweep(int max_deg, int max_n);

/// The signed (T⁻, T⁺) rule against the Schur-basis product for all a, b
/// within the bounds, plus its two degenerations.
Report verify_skew_lr(int max_outer_a, int max_outer_b);

/// skew_h_rho_product against iterated skew Pieri.
Report verify_h_rho(int max_outer, int max_rho);

/// LR products against monomial peeling for |λ| + |μ| <= max_product_degree,
/// and c^ν_{λμ} = c^ν_{μλ} for |ν| <= max_lr_degree.
Report verify_oracles(int max_product_degree, int max_lr_degree);

}  // namespace skewpieri
