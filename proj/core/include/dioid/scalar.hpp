#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dioid {

/// Element of Z ∪ {ε, ⊤} with max as ⊕ and + as ⊗.
///
/// ε = -∞ and ⊤ = +∞. Finite arithmetic is exact; leaving the int64 range
/// throws OverflowError instead of wrapping.
class MaxPlus {
 public:
  enum class Tag : std::uint8_t { Eps, Fin, Top };

  constexpr MaxPlus() noexcept = default;
  constexpr explicit MaxPlus(std::int64_t value) noexcept : tag_(Tag::Fin), value_(value) {}

  static constexpr MaxPlus eps() noexcept { return MaxPlus(); }
  static constexpr MaxPlus unit() noexcept { return MaxPlus(0); }
  static constexpr MaxPlus top() noexcept {
    MaxPlus t;
    t.tag_ = Tag::Top;
    return t;
  }

  constexpr Tag tag() const noexcept { return tag_; }
  constexpr bool is_eps() const noexcept { return tag_ == Tag::Eps; }
  constexpr bool is_finite() const noexcept { return tag_ == Tag::Fin; }
  constexpr bool is_top() const noexcept { return tag_ == Tag::Top; }

  /// Only meaningful when is_finite().
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(MaxPlus, MaxPlus) noexcept = default;

  /// Total order ε < finite < ⊤; this is the canonical order of the dioid.
  friend constexpr std::strong_ordering operator<=>(MaxPlus a, MaxPlus b) noexcept {
    if (a.tag_ != b.tag_) return a.tag_ <=> b.tag_;
    return a.value_ <=> b.value_;
  }

 private:
  Tag tag_ = Tag::Eps;
  std::int64_t value_ = 0;
};

/// Checked int64 addition; throws OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
/// Checked int64 subtraction; throws OverflowError.
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
/// Checked int64 multiplication; throws OverflowError.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

MaxPlus oplus(MaxPlus a, MaxPlus b) noexcept;
MaxPlus wedge(MaxPlus a, MaxPlus b) noexcept;

/// ε is absorbing, including ε ⊗ ⊤ = ε.
MaxPlus otimes(MaxPlus a, MaxPlus b);

/// ⊤ is absorbing, including ⊤ ⊙ ε = ⊤.
MaxPlus odot(MaxPlus a, MaxPlus b);

/// a\b: greatest x with a ⊗ x ⪯ b.
MaxPlus lres(MaxPlus a, MaxPlus b);

/// a⨸b: smallest x with a ⊙ x ⪰ b.
MaxPlus dualres(MaxPlus a, MaxPlus b);

/// a* = e ⊕ a ⊕ a² ⊕ …
MaxPlus star(MaxPlus a) noexcept;

/// a_* = e ∧ a ∧ a^⊙2 ∧ …
MaxPlus wedge_star(MaxPlus a) noexcept;

/// Negation exchanging ε and ⊤; used by the A\B = -Aᵀ ⊙ B shortcut.
MaxPlus negate(MaxPlus a);

inline bool leq(MaxPlus a, MaxPlus b) noexcept { return a <= b; }

std::string to_string(MaxPlus a);

}  // namespace dioid
