#include "dioid/scalar.hpp"

#include "dioid/errors.hpp"

namespace dioid {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

MaxPlus oplus(MaxPlus a, MaxPlus b) noexcept { return a < b ? b : a; }

MaxPlus wedge(MaxPlus a, MaxPlus b) noexcept { return a < b ? a : b; }

MaxPlus otimes(MaxPlus a, MaxPlus b) {
  if (a.is_eps() || b.is_eps()) return MaxPlus::eps();
  if (a.is_top() || b.is_top()) return MaxPlus::top();
  return MaxPlus(checked_add(a.value(), b.value()));
}

MaxPlus odot(MaxPlus a, MaxPlus b) {
  if (a.is_top() || b.is_top()) return MaxPlus::top();
  if (a.is_eps() || b.is_eps()) return MaxPlus::eps();
  return MaxPlus(checked_add(a.value(), b.value()));
}

MaxPlus lres(MaxPlus a, MaxPlus b) {
  if (a.is_eps() || b.is_top()) return MaxPlus::top();
  if (a.is_top() || b.is_eps()) return MaxPlus::eps();
  return MaxPlus(checked_sub(b.value(), a.value()));
}

MaxPlus dualres(MaxPlus a, MaxPlus b) {
  if (a.is_top() || b.is_eps()) return MaxPlus::eps();
  if (a.is_eps() || b.is_top()) return MaxPlus::top();
  return MaxPlus(checked_sub(b.value(), a.value()));
}

MaxPlus star(MaxPlus a) noexcept {
  if (a.is_top() || (a.is_finite() && a.value() > 0)) return MaxPlus::top();
  return MaxPlus::unit();
}

MaxPlus wedge_star(MaxPlus a) noexcept {
  if (a.is_eps() || (a.is_finite() && a.value() < 0)) return MaxPlus::eps();
  return MaxPlus::unit();
}

MaxPlus negate(MaxPlus a) {
  if (a.is_eps()) return MaxPlus::top();
  if (a.is_top()) return MaxPlus::eps();
  return MaxPlus(checked_sub(0, a.value()));
}

std::string to_string(MaxPlus a) {
  if (a.is_eps()) return "eps";
  if (a.is_top()) return "top";
  return std::to_string(a.value());
}

}  // namespace dioid
