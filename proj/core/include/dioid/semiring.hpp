#pragma once

#include <concepts>

#include "dioid/scalar.hpp"

namespace dioid {

/// Distinguished constants of a complete idempotent semiring.
/// Specialised next to each element type.
template <class T>
struct semiring_traits;

template <>
struct semiring_traits<MaxPlus> {
  static constexpr MaxPlus eps() noexcept { return MaxPlus::eps(); }
  static constexpr MaxPlus unit() noexcept { return MaxPlus::unit(); }
  static constexpr MaxPlus top() noexcept { return MaxPlus::top(); }
};

/// Element type usable by Matrix and the projector.
///
/// The six laws are found by ADL: ⊕ (oplus), ⊗ (otimes), ∧ (wedge),
/// ⊙ (odot), left residual a\b (lres) and dual residual a⨸b (dualres),
/// together with the scalar closures star and wedge_star. Every supported
/// element type is commutative, so b/a coincides with a\b.
template <class T>
concept Dioid = std::regular<T> && requires(const T& a, const T& b) {
  { semiring_traits<T>::eps() } -> std::convertible_to<T>;
  { semiring_traits<T>::unit() } -> std::convertible_to<T>;
  { semiring_traits<T>::top() } -> std::convertible_to<T>;
  { oplus(a, b) } -> std::convertible_to<T>;
  { otimes(a, b) } -> std::convertible_to<T>;
  { wedge(a, b) } -> std::convertible_to<T>;
  { odot(a, b) } -> std::convertible_to<T>;
  { lres(a, b) } -> std::convertible_to<T>;
  { dualres(a, b) } -> std::convertible_to<T>;
  { star(a) } -> std::convertible_to<T>;
  { wedge_star(a) } -> std::convertible_to<T>;
  { leq(a, b) } -> std::convertible_to<bool>;
};

template <class T>
T eps_of() {
  return semiring_traits<T>::eps();
}
template <class T>
T unit_of() {
  return semiring_traits<T>::unit();
}
template <class T>
T top_of() {
  return semiring_traits<T>::top();
}

}  // namespace dioid
