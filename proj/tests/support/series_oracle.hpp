#pragma once

// Definition-level evaluation of series operations. Every function here
// works on the raw monomial expansion ⊕ tᵢγ^nᵢ of its operands and the
// scalar laws, never on canonical forms or tail analysis.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dioid/scalar.hpp"
#include "dioid/series.hpp"

namespace dioid::testing {

/// Monomials of s with exponent ≤ limit: p, then q ⊗ r^j.
inline std::vector<Monomial> expand(const Series& s, std::int64_t limit) {
  std::vector<Monomial> out;
  for (const auto& m : s.transient())
    if (m.exp <= limit) out.push_back(m);
  if (s.period()) {
    for (std::int64_t j = 0;; ++j) {
      bool any = false;
      for (const auto& m : s.pattern()) {
        std::int64_t e = m.exp + j * s.period()->nu;
        if (e > limit) continue;
        any = true;
        out.push_back(Monomial{otimes(m.coef, MaxPlus(j * s.period()->tau)), e});
      }
      if (!any) break;
    }
  }
  return out;
}

/// Value at k of a sum of monomials: max{tᵢ : nᵢ ≤ k}.
inline MaxPlus eval(const std::vector<Monomial>& ms, std::int64_t k) {
  MaxPlus v;
  for (const auto& m : ms)
    if (m.exp <= k) v = oplus(v, m.coef);
  return v;
}

/// s(k) for s = p ⊕ q ⊗ r*: the largest coefficient among p and the
/// monomials m ⊗ r^j of q ⊗ r* with exponent ≤ k. For each m the best j is
/// the largest admissible one, since τ > 0.
inline MaxPlus eval(const Series& s, std::int64_t k) {
  if (s.is_eps()) return MaxPlus::eps();
  if (s.is_top()) return MaxPlus::top();
  MaxPlus v = eval(s.transient(), k);
  if (s.period())
    for (const auto& m : s.pattern())
      if (m.exp <= k) {
        std::int64_t j = (k - m.exp) / s.period()->nu;
        v = oplus(v, otimes(m.coef, MaxPlus(j * s.period()->tau)));
      }
  return v;
}

inline std::int64_t lowest_exp(const Series& s) {
  std::int64_t lo = s.transient().empty() ? s.pattern().front().exp : s.transient().front().exp;
  for (const auto& m : s.pattern()) lo = std::min(lo, m.exp);
  return lo;
}

/// (a ⊗ b)(k) = ⊕ᵢ⊕ⱼ (tᵢ + tⱼ) over nᵢ + nⱼ ≤ k.
inline MaxPlus product_at(const Series& a, const Series& b, std::int64_t k) {
  if (a.is_eps() || b.is_eps()) return MaxPlus::eps();
  if (a.is_top() || b.is_top()) return MaxPlus::top();
  auto ma = expand(a, k - lowest_exp(b));
  auto mb = expand(b, k - lowest_exp(a));
  MaxPlus v;
  for (const auto& x : ma)
    for (const auto& y : mb)
      if (x.exp + y.exp <= k) v = oplus(v, otimes(x.coef, y.coef));
  return v;
}

/// (a \ b)(k) = ∧ⱼ over monomials of a of tⱼ \ b(k + nⱼ).
///
/// The infimum ranges over infinitely many monomials when a is periodic. It
/// is taken over exponents up to `horizon` and again up to twice as far: a
/// stable value is exact, a still-decreasing one can only tend to ε.
inline MaxPlus residual_at(const Series& a, const Series& b, std::int64_t k, std::int64_t horizon = 240) {
  if (a.is_eps()) return MaxPlus::top();
  if (a.is_top()) return b.is_top() ? MaxPlus::top() : MaxPlus::eps();
  auto upto = [&](std::int64_t limit) {
    MaxPlus v = MaxPlus::top();
    for (const auto& m : expand(a, limit)) v = wedge(v, lres(m.coef, eval(b, k + m.exp)));
    return v;
  };
  std::int64_t base = lowest_exp(a);
  MaxPlus near = upto(base + horizon);
  MaxPlus far = upto(base + 2 * horizon);
  return near == far ? near : MaxPlus::eps();
}

/// (tγⁿ ⊙ s)(k) = t ⊙ s(k − n).
inline MaxPlus mono_odot_at(MaxPlus t, std::int64_t n, const Series& s, std::int64_t k) {
  return odot(t, eval(s, k - n));
}

/// (tγⁿ ⨸ s)(k) = t ⨸ s(k + n).
inline MaxPlus mono_dualres_at(MaxPlus t, std::int64_t n, const Series& s, std::int64_t k) {
  return dualres(t, eval(s, k + n));
}

/// s*(k) = max over i of sⁱ(k). When every exponent of s is ≥ 1, sⁱ(k) = ε
/// for i > k, so the first k + 1 powers are exact on [0, limit].
inline std::vector<MaxPlus> star_values(const Series& s, std::int64_t limit) {
  auto terms = expand(s, limit);
  // best[k] = max weight of a path of total exponent ≤ k, dynamic program
  // over the number of factors (at most limit of them).
  std::vector<MaxPlus> best(static_cast<std::size_t>(limit + 1), MaxPlus::unit());
  std::vector<MaxPlus> layer = best;
  for (std::int64_t i = 1; i <= limit; ++i) {
    std::vector<MaxPlus> next(layer.size(), MaxPlus::eps());
    for (std::int64_t k = 0; k <= limit; ++k)
      for (const auto& m : terms)
        if (m.exp >= 1 && m.exp <= k) next[k] = oplus(next[k], otimes(layer[k - m.exp], m.coef));
    for (std::int64_t k = 0; k <= limit; ++k) best[k] = oplus(best[k], next[k]);
    layer = std::move(next);
  }
  return best;
}

/// Last index worth comparing: past every transient corner and two full
/// periods of the pattern, where both operands are already periodic.
inline std::int64_t check_window(const Series& s) {
  std::int64_t end = 30;
  if (s.kind() != Series::Kind::Regular) return end;
  for (const auto& m : s.transient()) end = std::max(end, m.exp + 1);
  if (s.period())
    for (const auto& m : s.pattern()) end = std::max(end, m.exp + 2 * s.period()->nu + 1);
  return end;
}

}  // namespace dioid::testing
