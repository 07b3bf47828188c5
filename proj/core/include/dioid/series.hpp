#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioid/scalar.hpp"
#include "dioid/semiring.hpp"

namespace dioid {

/// t γ^n, read as the non-decreasing counter k ↦ t for k ≥ n, ε below.
struct Monomial {
  MaxPlus coef;
  std::int64_t exp = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// r = τ γ^ν with τ > 0 and ν > 0.
struct Period {
  std::int64_t tau = 1;
  std::int64_t nu = 1;
  friend bool operator==(const Period&, const Period&) = default;
};

/// Element of γ*Z̄max[[γ]]: a non-decreasing map k ↦ s(k) over Z.
///
/// Regular values are stored canonically as p ⊕ q ⊗ r*, where p (transient)
/// and q (pattern) list the corners of s with strictly increasing exponents
/// and coefficients, and r is the minimal period. Coefficients are finite
/// except possibly the last transient monomial, which may be ⊤ (a ⊤-tail).
/// ε(γ) and ⊤(γ) are separate kinds since neither has a first exponent.
class Series {
 public:
  enum class Kind : std::uint8_t { Eps, Regular, Top };

  Series() = default;

  static Series eps() { return Series(); }
  static Series top();
  /// e(γ) = 0 γ^0.
  static Series unit();
  static Series monomial(MaxPlus coef, std::int64_t exp);
  /// Canonical form of ⊕ raw. Dominated and ε monomials disappear.
  static Series polynomial(const std::vector<Monomial>& raw);
  /// Canonical form of p ⊕ q ⊗ r*. Throws DomainError if r is not τγ^ν
  /// with τ, ν > 0.
  static Series periodic(const std::vector<Monomial>& p, const std::vector<Monomial>& q, Period r);

  /// Canonical series from samples s(lo), …, s(lo + n - 1) of a non-decreasing
  /// map. With nu == 0 the last sample is repeated forever; otherwise
  /// s(k + nu) = s(k) + tau is assumed for k ≥ lo + n - nu.
  static Series from_samples(std::int64_t lo, const std::vector<MaxPlus>& values, std::int64_t nu = 0,
                             std::int64_t tau = 0);

  Kind kind() const noexcept { return kind_; }
  bool is_eps() const noexcept { return kind_ == Kind::Eps; }
  bool is_top() const noexcept { return kind_ == Kind::Top; }
  const std::vector<Monomial>& transient() const noexcept { return p_; }
  const std::vector<Monomial>& pattern() const noexcept { return q_; }
  const std::optional<Period>& period() const noexcept { return r_; }

  /// ε(γ), ⊤(γ), or a single monomial with finite coefficient.
  bool is_monomial_like() const noexcept;
  /// Smallest k with s(k) ≠ ε. Only meaningful for Regular.
  std::int64_t valuation() const noexcept;
  /// s(k).
  MaxPlus at(std::int64_t k) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  Kind kind_ = Kind::Eps;
  std::vector<Monomial> p_;
  std::vector<Monomial> q_;
  std::optional<Period> r_;
};

Series oplus(const Series& a, const Series& b);
Series wedge(const Series& a, const Series& b);
Series otimes(const Series& a, const Series& b);
/// a\b: greatest x with a ⊗ x ⪯ b.
Series lres(const Series& a, const Series& b);
/// m ⊙ s. Throws DomainError unless m is monomial-like.
Series odot(const Series& m, const Series& s);
/// m⨸s: smallest x with m ⊙ x ⪰ s. Throws DomainError unless m is
/// monomial-like.
Series dualres(const Series& m, const Series& s);
/// s* = e ⊕ s ⊕ s² ⊕ …. Throws DomainError when the result would be finite
/// for arbitrarily negative k (a circuit with negative exponent and
/// non-positive weight).
Series star(const Series& s);
/// s_* = e ∧ s ∧ s^⊙2 ∧ …. Throws DomainError unless s is monomial-like.
Series wedge_star(const Series& s);
bool leq(const Series& a, const Series& b);

/// Asymptotic slope σ∞ = ν/τ as a reduced fraction.
///
/// Conventions outside the periodic case: ε(γ) and eventually-constant
/// finite series are +∞; ⊤(γ) is −∞; a series ending in ⊤ has slope 0.
struct Slope {
  enum class Kind : std::uint8_t { MinusInf, Finite, PlusInf };
  Kind kind = Kind::PlusInf;
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Slope&, const Slope&) = default;
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);
};

Slope sigma_inf(const Series& s);
std::string to_string(const Slope& s);

template <>
struct semiring_traits<Series> {
  static Series eps() { return Series::eps(); }
  static Series unit() { return Series::unit(); }
  static Series top() { return Series::top(); }
};

}  // namespace dioid
