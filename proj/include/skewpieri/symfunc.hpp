#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "skewpieri/shapes.hpp"
#include "skewpieri/tableaux.hpp"

namespace skewpieri {

using Integer = boost::multiprecision::cpp_int;

/// Finite formal sum of basis elements with nonzero integer coefficients.
/// Iteration order follows `Key`'s ordering.
template <class Key>
class Expansion {
 public:
  using Terms = std::map<Key, Integer>;

  Expansion() = default;

  static Expansion term(Key key, Integer coeff = 1) {
    Expansion e;
    e.add(key, coeff);
    return e;
  }

  void add(const Key& key, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Expansion& operator+=(const Expansion& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Expansion& operator-=(const Expansion& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Expansion& operator*=(const Integer& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
  }

  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
  friend Expansion operator-(Expansion a) { return a *= Integer(-1); }
  friend Expansion operator*(Expansion a, const Integer& s) { return a *= s; }
  friend Expansion operator*(const Integer& s, Expansion a) { return a *= s; }

  /// Term-by-term equality; for skew expansions this is stricter than
  /// equality as symmetric functions.
  friend bool syntactically_equal(const Expansion& a, const Expansion& b) { return a.terms_ == b.terms_; }

  friend bool operator==(const Expansion& a, const Expansion& b)
    requires std::same_as<Key, Partition>
  {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

using SchurExpansion = Expansion<Partition>;
using SkewExpansion = Expansion<SkewShape>;
using MonomialExpansion = std::map<Composition, Integer>;

inline SchurExpansion schur(const Partition& p) { return SchurExpansion::term(p); }
SchurExpansion h(int n);
SchurExpansion e(int n);
SchurExpansion omega(const SchurExpansion& f);

/// Largest partition size in the support; -1 for zero.
int degree(const SchurExpansion& f);

/// Number of LR fillings of ν/λ with content μ.
Integer lr_coefficient(const Partition& nu, const Partition& lam, const Partition& mu);

/// s_{λ/μ} = Σ_ν c^λ_{μν} s_ν, read off the LR fillings of λ/μ.
SchurExpansion skew_to_schur(const SkewShape& s);
SchurExpansion skew_expansion_to_schur(const SkewExpansion& f);

/// Equality as symmetric functions.
bool equivalent(const SkewExpansion& a, const SkewExpansion& b);

SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g);

Integer hall_inner(const SchurExpansion& f, const SchurExpansion& g);

/// f^⊥(g): the coefficient of s_ν is <g, f s_ν>.
SchurExpansion perp(const SchurExpansion& f, const SchurExpansion& g);

/// Σ_T x^T over SSYTs of `s` with entries at most num_vars.
MonomialExpansion monomial_expansion(const SkewShape& s, int num_vars);
MonomialExpansion monomial_expansion(const SchurExpansion& f, int num_vars);

/// Pointwise convolution of two monomial expansions.
MonomialExpansion monomial_product(const MonomialExpansion& a, const MonomialExpansion& b);

/// Peels off Schur functions greedily from the lexicographically largest
/// partition exponent. `num_vars` must be at least the largest degree present
/// for the result to be faithful. Throws NotSymmetric.
SchurExpansion schur_from_monomials(const MonomialExpansion& m, int num_vars);

struct AppendixCheck {
  std::vector<std::string> failures;  // names of identities that did not hold
  bool ok() const noexcept { return failures.empty(); }
};

/// Checks, exactly:
///   f h_n^⊥(g) = Σ_k (-1)^k h_{n-k}^⊥(e_k^⊥(f) g)
///   Σ_i (-1)^i e_i h_{n-i} = 0
///   h_n^⊥(fg) = Σ_i h_{n-i}^⊥(f) h_i^⊥(g)
///   (fg)^⊥ = f^⊥ g^⊥ on every s_γ with |γ| <= deg f + deg g
AppendixCheck verify_appendix(const SchurExpansion& f, const SchurExpansion& g, int n);

}  // namespace skewpieri
