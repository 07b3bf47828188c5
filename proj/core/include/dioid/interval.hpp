#pragma once

#include <utility>

#include "dioid/errors.hpp"
#include "dioid/matrix.hpp"
#include "dioid/semiring.hpp"

namespace dioid {

/// (x′, x″) with no order constraint; the carrier of residual computations
/// before they are pulled back into the ordered pairs.
template <class T>
struct OrderedPair {
  T first;
  T second;
  friend bool operator==(const OrderedPair&, const OrderedPair&) = default;
};

/// Greatest ordered pair below p: (x′ ∧ x″, x″).
template <Dioid T>
OrderedPair<T> pair_project_down(const OrderedPair<T>& p) {
  return {wedge(p.first, p.second), p.second};
}

/// Smallest ordered pair above p: (x′, x′ ⊕ x″).
template <Dioid T>
OrderedPair<T> pair_project_up(const OrderedPair<T>& p) {
  return {p.first, oplus(p.first, p.second)};
}

/// [lo, hi] with lo ⪯ hi.
template <Dioid T>
class Interval {
 public:
  Interval() : lo_(eps_of<T>()), hi_(eps_of<T>()) {}
  explicit Interval(T x) : lo_(x), hi_(std::move(x)) {}
  Interval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!leq(lo_, hi_)) throw DomainError("interval lower bound exceeds upper bound");
  }

  /// Pulls an arbitrary pair back into an interval via pair_project_down.
  static Interval below(const OrderedPair<T>& p) {
    auto q = pair_project_down(p);
    return Interval(std::move(q.first), std::move(q.second), Unchecked{});
  }
  /// Pushes an arbitrary pair up into an interval via pair_project_up.
  static Interval above(const OrderedPair<T>& p) {
    auto q = pair_project_up(p);
    return Interval(std::move(q.first), std::move(q.second), Unchecked{});
  }

  const T& lo() const noexcept { return lo_; }
  const T& hi() const noexcept { return hi_; }
  bool is_degenerate() const { return lo_ == hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  struct Unchecked {};
  Interval(T lo, T hi, Unchecked) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  T lo_;
  T hi_;
};

template <Dioid T>
Interval<T> oplus(const Interval<T>& a, const Interval<T>& b) {
  return Interval<T>(oplus(a.lo(), b.lo()), oplus(a.hi(), b.hi()));
}
template <Dioid T>
Interval<T> wedge(const Interval<T>& a, const Interval<T>& b) {
  return Interval<T>(wedge(a.lo(), b.lo()), wedge(a.hi(), b.hi()));
}
template <Dioid T>
Interval<T> otimes(const Interval<T>& a, const Interval<T>& b) {
  return Interval<T>(otimes(a.lo(), b.lo()), otimes(a.hi(), b.hi()));
}
template <Dioid T>
Interval<T> odot(const Interval<T>& a, const Interval<T>& b) {
  return Interval<T>(odot(a.lo(), b.lo()), odot(a.hi(), b.hi()));
}

/// Greatest y with a ⊗ y ⪯ x: [a̲\x̲ ∧ ā\x̄, ā\x̄].
template <Dioid T>
Interval<T> lres(const Interval<T>& a, const Interval<T>& x) {
  return Interval<T>::below({lres(a.lo(), x.lo()), lres(a.hi(), x.hi())});
}

/// Smallest y with a ⊙ y ⪰ x: [a̲⨸x̲, a̲⨸x̲ ⊕ ā⨸x̄].
template <Dioid T>
Interval<T> dualres(const Interval<T>& a, const Interval<T>& x) {
  return Interval<T>::above({dualres(a.lo(), x.lo()), dualres(a.hi(), x.hi())});
}

template <Dioid T>
Interval<T> star(const Interval<T>& a) {
  return Interval<T>(star(a.lo()), star(a.hi()));
}
template <Dioid T>
Interval<T> wedge_star(const Interval<T>& a) {
  return Interval<T>(wedge_star(a.lo()), wedge_star(a.hi()));
}

/// Product order.
template <Dioid T>
bool leq(const Interval<T>& a, const Interval<T>& b) {
  return leq(a.lo(), b.lo()) && leq(a.hi(), b.hi());
}

template <Dioid T>
struct semiring_traits<Interval<T>> {
  static Interval<T> eps() { return Interval<T>(eps_of<T>()); }
  static Interval<T> unit() { return Interval<T>(unit_of<T>()); }
  static Interval<T> top() { return Interval<T>(top_of<T>()); }
};

template <Dioid T>
Matrix<T> lower_bounds(const Matrix<Interval<T>>& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).lo();
  return r;
}

template <Dioid T>
Matrix<T> upper_bounds(const Matrix<Interval<T>>& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).hi();
  return r;
}

/// Throws DomainError if some lo(i, j) ⋠ hi(i, j).
template <Dioid T>
Matrix<Interval<T>> make_interval_matrix(const Matrix<T>& lo, const Matrix<T>& hi) {
  detail::require_same_shape(lo, hi, "interval matrix");
  Matrix<Interval<T>> r(lo.rows(), lo.cols());
  for (std::size_t i = 0; i < lo.rows(); ++i)
    for (std::size_t j = 0; j < lo.cols(); ++j) r(i, j) = Interval<T>(lo(i, j), hi(i, j));
  return r;
}

}  // namespace dioid
