#include "skewpieri/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "skewpieri/format.hpp"
#include "skewpieri/involution.hpp"
#include "skewpieri/rules.hpp"
#include "skewpieri/symfunc.hpp"

namespace skewpieri {

bool Report::passed() const noexcept { return failures() == 0; }

std::size_t Report::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.passed; }));
}

const CaseResult* Report::first_failure() const noexcept {
  for (const auto& c : cases)
    if (!c.passed) return &c;
  return nullptr;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n)
    for (auto& p : partitions_of(n)) out.push_back(std::move(p));
  return out;
}

std::vector<SkewShape> skew_shapes_up_to(int max_outer) {
  std::vector<SkewShape> out;
  for (const auto& lam : partitions_up_to(max_outer))
    for (const auto& mu : subpartitions(lam)) out.emplace_back(lam, mu);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs one case; a check returns an empty string on success or a description
// of the counterexample. Library errors count as failures.
void run_case(Report& report, std::string name, const std::function<std::string()>& check) {
  const auto start = Clock::now();
  CaseResult result{std::move(name), true, 0.0, {}};
  try {
    result.counterexample = check();
  } catch (const std::exception& ex) {
    result.counterexample = std::string("exception: ") + ex.what();
  }
  result.passed = result.counterexample.empty();
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  report.seconds += result.seconds;
  report.cases.push_back(std::move(result));
}

std::string describe(const SchurExpansion& lhs, const SchurExpansion& rhs) {
  return "lhs " + format_text(lhs, " ") + " | rhs " + format_text(rhs, " ");
}

MonomialExpansion signed_monomials(const SkewExpansion& f, int vars) {
  MonomialExpansion out;
  for (const auto& [shape, c] : f.terms())
    for (const auto& [m, k] : monomial_expansion(shape, vars)) out[m] += c * k;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Report verify_skew_pieri(const SkewPieriOptions& options) {
  Report report{"skew-pieri", {}, 0.0};
  const int monomial_limit = options.monomial_max_outer < 0 ? options.max_outer : options.monomial_max_outer;
  for (const auto& s : skew_shapes_up_to(options.max_outer))
    for (int n = 1; n <= options.max_n; ++n) {
      run_case(report, format_shape(s) + " n=" + std::to_string(n), [&]() -> std::string {
        const auto expansion = skew_pieri(s, n);
        const auto lhs = skew_expansion_to_schur(expansion);
        const auto rhs = schur_product(skew_to_schur(s), h(n));
        if (!(lhs == rhs)) return "schur basis: " + describe(lhs, rhs);

        if (s.outer().size() <= monomial_limit) {
          const int vars = std::max(1, s.size() + n);
          const auto product =
              monomial_product(monomial_expansion(s, vars), monomial_expansion(SkewShape(Partition{n}), vars));
          if (product != signed_monomials(expansion, vars)) return "monomial expansions differ";
        }
        if (options.max_entry > 0)
          if (auto bad = check_involution_case(s, n, options.max_entry)) return *bad;
        return {};
      });
    }
  return report;
}

std::optional<std::string> check_involution_case(const SkewShape& base, int n, int max_entry) {
  std::map<Composition, long long> signed_count;
  std::set<std::vector<int>> star_images;  // row words of the fixed point images
  long long fixed = 0;

  auto flatten = [](const Tableau& t) {
    std::vector<int> w;
    for (int r = 1; r <= t.num_rows(); ++r) w.insert(w.end(), t.row(r).begin(), t.row(r).end());
    return w;
  };

  for (int k = 0; k <= n; ++k)
    for (const auto& lam_plus : enumerate_outer_strips(base.outer(), n - k, StripKind::horizontal))
      for (const auto& mu_minus : enumerate_inner_strips(base.inner(), k, StripKind::vertical)) {
        std::optional<std::string> bad;
        for_each_ssyt(SkewShape(lam_plus, mu_minus), max_entry, [&](const Tableau& t) {
          if (bad) return;
          const SlideContext ctx{base, t};
          const auto image = phi(ctx);
          const std::string where = " at " + format_tableau(t);
          try {
            check_context(image);
          } catch (const std::exception& ex) {
            bad = std::string("phi left the domain (") + ex.what() + ")" + where;
            return;
          }
          if (strip_size(image) != n) bad = "phi changed n" + where;
          else if (content(image.tableau) != content(t)) bad = "phi changed the content" + where;
          else if (phi(image) != ctx) bad = "phi is not an involution" + where;
          else if (image == ctx) {
            if (!is_fixed_point(ctx)) bad = "phi fixes a tableau with an upward or downward path" + where;
            const auto star_t = fixed_point_to_star(ctx);
            if (!validate(star_t, TableauKind::ssyt) || content(star_t) != content(t))
              bad = "fixed point image is not an SSYT with the same content" + where;
            else if (star_to_fixed_point(base, star_t) != ctx)
              bad = "star bijection does not invert" + where;
            star_images.insert(flatten(star_t));
            ++fixed;
          } else if (std::abs(inner_strip_size(image) - inner_strip_size(ctx)) != 1) {
            bad = "phi does not flip the sign" + where;
          }
          signed_count[content(t)] += k % 2 == 0 ? 1 : -1;
        });
        if (bad) return bad;
      }

  const auto star_shape = star(base, SkewShape(Partition{n}));
  long long star_count = 0;
  std::optional<std::string> bad;
  for_each_ssyt(star_shape, max_entry, [&](const Tableau& t) {
    ++star_count;
    signed_count[content(t)] -= 1;
    if (!bad && !star_images.contains(flatten(t))) bad = "star tableau " + format_tableau(t) + " is not hit";
  });
  if (bad) return bad;
  if (star_count != fixed)
    return "fixed points " + std::to_string(fixed) + " vs star tableaux " + std::to_string(star_count);
  for (const auto& [c, v] : signed_count)
    if (v != 0) return "signed count does not cancel for some content";
  return std::nullopt;
}

Report verify_involution(int max_outer, int max_n, int max_entry) {
  Report report{"involution", {}, 0.0};
  for (const auto& s : skew_shapes_up_to(max_outer))
    for (int n = 1; n <= max_n; ++n)
      run_case(report, format_shape(s) + " n=" + std::to_string(n), [&]() -> std::string {
        return check_involution_case(s, n, max_entry).value_or("");
      });
  return report;
}

Report verify_appendix_sweep(int max_deg, int max_n) {
  Report report{"appendix", {}, 0.0};
  const auto parts = partitions_up_to(max_deg);
  for (const auto& alpha : parts)
    for (const auto& beta : parts)
      for (int n = 1; n <= max_n; ++n)
        run_case(report,
                 "f=s[" + format_partition(alpha) + "] g=s[" + format_partition(beta) + "] n=" + std::to_string(n),
                 [&]() -> std::string {
                   const auto check = verify_appendix(schur(alpha), schur(beta), n);
                   std::string msg;
                   for (const auto& f : check.failures) msg += (msg.empty() ? "" : "; ") + f;
                   return msg;
                 });
  return report;
}

Report verify_skew_lr(int max_outer_a, int max_outer_b) {
  Report report{"skew-lr", {}, 0.0};
  const auto as = skew_shapes_up_to(max_outer_a);
  const auto bs = skew_shapes_up_to(max_outer_b);
  for (const auto& a : as) {
    const auto sa = skew_to_schur(a);
    for (const auto& b : bs)
      run_case(report, format_shape(a) + " * " + format_shape(b), [&]() -> std::string {
        const auto lhs = skew_expansion_to_schur(skew_lr_product(a, b));
        const auto rhs = schur_product(sa, skew_to_schur(b));
        return lhs == rhs ? "" : describe(lhs, rhs);
      });
    for (int n = 1; n <= max_outer_b; ++n)
      run_case(report, format_shape(a) + " * (" + std::to_string(n) + ") term by term", [&]() -> std::string {
        const SkewShape row(Partition{n});
        return syntactically_equal(skew_lr_product(a, row), skew_pieri(a, n)) ? "" : "differs from skew Pieri";
      });
  }
  for (const auto& lam : partitions_up_to(max_outer_a))
    for (const auto& sigma : partitions_up_to(max_outer_b))
      run_case(report, "s[" + format_partition(lam) + "] * s[" + format_partition(sigma) + "] classical",
               [&]() -> std::string {
                 const auto lhs = skew_expansion_to_schur(skew_lr_product(SkewShape(lam), SkewShape(sigma)));
                 const auto rhs = schur_product(schur(lam), schur(sigma));
                 return lhs == rhs ? "" : describe(lhs, rhs);
               });
  return report;
}

Report verify_h_rho(int max_outer, int max_rho) {
  Report report{"h-rho", {}, 0.0};
  for (const auto& a : skew_shapes_up_to(max_outer))
    for (const auto& rho : partitions_up_to(max_rho)) {
      if (rho.empty()) continue;
      run_case(report, format_shape(a) + " rho=" + format_partition(rho), [&]() -> std::string {
        const auto lhs = skew_expansion_to_schur(skew_h_rho_product(a, rho));
        const auto rhs = skew_expansion_to_schur(iterated_skew_pieri(a, rho));
        if (!(lhs == rhs)) return describe(lhs, rhs);
        if (rho.length() == 1 && !syntactically_equal(skew_h_rho_product(a, rho), skew_pieri(a, rho.part(1))))
          return "single-row case differs from skew Pieri term by term";
        return {};
      });
    }
  return report;
}

Report verify_oracles(int max_product_degree, int max_lr_degree) {
  Report report{"oracles", {}, 0.0};
  const auto parts = partitions_up_to(max_product_degree);
  for (const auto& lam : parts)
    for (const auto& mu : parts) {
      if (lam.size() + mu.size() > max_product_degree) continue;
      run_case(report, "s[" + format_partition(lam) + "] * s[" + format_partition(mu) + "]", [&]() -> std::string {
        const int vars = std::max(1, lam.size() + mu.size());
        const auto product = monomial_product(monomial_expansion(SkewShape(lam), vars),
                                              monomial_expansion(SkewShape(mu), vars));
        const auto lhs = schur_product(schur(lam), schur(mu));
        const auto rhs = schur_from_monomials(product, vars);
        return lhs == rhs ? "" : describe(lhs, rhs);
      });
    }
  for (const auto& nu : partitions_up_to(max_lr_degree))
    run_case(report, "c^" + format_partition(nu) + " symmetry", [&]() -> std::string {
      for (const auto& lam : subpartitions(nu))
        for (const auto& mu : partitions_of(nu.size() - lam.size()))
          if (lr_coefficient(nu, lam, mu) != lr_coefficient(nu, mu, lam))
            return "c^" + format_partition(nu) + "_{" + format_partition(lam) + "," + format_partition(mu) + "}";
      return {};
    });
  return report;
}

}  // namespace skewpieri
