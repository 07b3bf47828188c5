#pragma once

#include <cstdint>

#include "dioid/errors.hpp"
#include "dioid/interval.hpp"
#include "dioid/matrix.hpp"
#include "dioid/scalar.hpp"
#include "dioid/series.hpp"

namespace dioid {

/// Whether b⨸(a ⊗ x) = (b⨸a) ⊗ x holds for every entry b of B.
///
/// Over Z̄max this is checked exhaustively on representatives of every
/// ε/finite/⊤ combination plus the entries of A and `samples` random finite
/// triples. Over series it is the structural condition that every entry of
/// B is a monomial, ε or ⊤. Intervals are checked bound by bound.
bool check_hypothesis(const Matrix<MaxPlus>& b, const Matrix<MaxPlus>& a, std::size_t samples = 256,
                      std::uint64_t seed = 1);
bool check_hypothesis(const Matrix<Series>& b, const Matrix<Series>& a, std::size_t samples = 0,
                      std::uint64_t seed = 1);

template <Dioid T>
bool check_hypothesis(const Matrix<Interval<T>>& b, const Matrix<Interval<T>>& a, std::size_t samples = 256,
                      std::uint64_t seed = 1) {
  return check_hypothesis(lower_bounds(b), lower_bounds(a), samples, seed) &&
         check_hypothesis(upper_bounds(b), upper_bounds(a), samples, seed);
}

namespace detail {

template <class T>
void require_problem_shape(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& x) {
  require_square(a, "projector");
  require_square(b, "projector");
  if (a.rows() != b.rows()) throw ShapeError("projector: A and B must have the same dimension");
  if (x.rows() != a.rows()) throw ShapeError("projector: X must have as many rows as A");
}

}  // namespace detail

/// A ⊗ X ⪯ X ⪯ B ⊙ X
template <Dioid T>
bool membership(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& x) {
  detail::require_problem_shape(a, b, x);
  return mat_leq(mat_otimes(a, x), x) && mat_leq(x, mat_odot(b, x));
}

/// B_*⨸A*, whose star drives the projector.
template <Dioid T>
Matrix<T> projector_kernel(const Matrix<T>& a, const Matrix<T>& b) {
  return dual_residual(wedge_closure(b), kleene_star(a));
}

/// P(X0) = (B_*⨸A*)*\X0, the greatest X ⪯ X0 with A ⊗ X ⪯ X ⪯ B ⊙ X.
/// Throws HypothesisError when check_hypothesis(B, A) fails.
template <Dioid T>
Matrix<T> project(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& x0) {
  detail::require_problem_shape(a, b, x0);
  if (!check_hypothesis(b, a)) throw HypothesisError("projector: B violates b⨸(a⊗x) = (b⨸a)⊗x");
  return left_residual(kleene_star(projector_kernel(a, b)), x0);
}

template <Dioid T>
struct IntervalProjection {
  Matrix<Interval<T>> value;
  /// (B̲_*⨸A̲*)*
  Matrix<T> lower_closure;
  /// (B̄_*⨸Ā*)*
  Matrix<T> upper_closure;
  /// ((B̲_*⨸A̲*) ⊕ (B̄_*⨸Ā*))*, the closure actually applied to X̄.
  Matrix<T> joint_closure;
};

/// Interval projector from the two-bound formula:
/// lo = (M̲*\X̲) ∧ ((M̲ ⊕ M̄)*\X̄), hi = (M̲ ⊕ M̄)*\X̄ with M = B_*⨸A* per bound.
template <Dioid T>
IntervalProjection<T> interval_project(const Matrix<Interval<T>>& a, const Matrix<Interval<T>>& b,
                                       const Matrix<Interval<T>>& x0) {
  detail::require_problem_shape(a, b, x0);
  if (!check_hypothesis(b, a)) throw HypothesisError("projector: B violates b⨸(a⊗x) = (b⨸a)⊗x");
  Matrix<T> ml = projector_kernel(lower_bounds(a), lower_bounds(b));
  Matrix<T> mh = projector_kernel(upper_bounds(a), upper_bounds(b));
  Matrix<T> low_star = kleene_star(ml);
  Matrix<T> joint_star = kleene_star(mat_oplus(ml, mh));
  Matrix<T> hi = left_residual(joint_star, upper_bounds(x0));
  Matrix<T> lo = mat_wedge(left_residual(low_star, lower_bounds(x0)), hi);
  return {make_interval_matrix(lo, hi), low_star, kleene_star(mh), joint_star};
}

}  // namespace dioid
