#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dioid/errors.hpp"
#include "dioid/scalar.hpp"
#include "dioid/semiring.hpp"

namespace dioid {

/// Dense row-major matrix over a dioid. Both dimensions are at least 1.
template <Dioid T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill = eps_of<T>())
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()), cols_(0) {
    if (rows_ > 0) cols_ = rows.begin()->size();
    data_.reserve(checked_size(rows_, cols_));
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix eps(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, eps_of<T>()); }
  static Matrix top(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, top_of<T>()); }

  /// E: e on the diagonal, ε elsewhere.
  static Matrix identity(std::size_t n) {
    Matrix m(n, n, eps_of<T>());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = unit_of<T>();
    return m;
  }

  /// E⊙: e on the diagonal, ⊤ elsewhere.
  static Matrix dual_identity(std::size_t n) {
    Matrix m(n, n, top_of<T>());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = unit_of<T>();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static std::size_t checked_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    return rows * cols;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

namespace detail {

inline std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

template <class T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(op) + ": shapes " + dims(a.rows(), a.cols()) + " and " + dims(b.rows(), b.cols()) +
                     " differ");
}

template <class T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.is_square()) throw ShapeError(std::string(op) + ": matrix " + dims(a.rows(), a.cols()) + " is not square");
}

template <class T, class F>
Matrix<T> entrywise(const Matrix<T>& a, const Matrix<T>& b, const char* op, F f) {
  require_same_shape(a, b, op);
  Matrix<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = f(a(i, j), b(i, j));
  return r;
}

}  // namespace detail

template <Dioid T>
Matrix<T> mat_oplus(const Matrix<T>& a, const Matrix<T>& b) {
  return detail::entrywise(a, b, "oplus", [](const T& x, const T& y) { return oplus(x, y); });
}

template <Dioid T>
Matrix<T> mat_wedge(const Matrix<T>& a, const Matrix<T>& b) {
  return detail::entrywise(a, b, "wedge", [](const T& x, const T& y) { return wedge(x, y); });
}

/// (A ⊗ X)ij = ⊕k aik ⊗ xkj
template <Dioid T>
Matrix<T> mat_otimes(const Matrix<T>& a, const Matrix<T>& x) {
  if (a.cols() != x.rows())
    throw ShapeError("product: inner dimensions of " + detail::dims(a.rows(), a.cols()) + " and " +
                     detail::dims(x.rows(), x.cols()) + " differ");
  Matrix<T> r(a.rows(), x.cols(), eps_of<T>());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      T acc = eps_of<T>();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), x(k, j)));
      r(i, j) = acc;
    }
  return r;
}

/// (A ⊙ X)ij = ∧k aik ⊙ xkj
template <Dioid T>
Matrix<T> mat_odot(const Matrix<T>& a, const Matrix<T>& x) {
  if (a.cols() != x.rows())
    throw ShapeError("dual product: inner dimensions of " + detail::dims(a.rows(), a.cols()) + " and " +
                     detail::dims(x.rows(), x.cols()) + " differ");
  Matrix<T> r(a.rows(), x.cols(), top_of<T>());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      T acc = top_of<T>();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = wedge(acc, odot(a(i, k), x(k, j)));
      r(i, j) = acc;
    }
  return r;
}

/// A\B, the greatest X with A ⊗ X ⪯ B: (A\B)ij = ∧k aki\bkj
template <Dioid T>
Matrix<T> left_residual(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows())
    throw ShapeError("left residual: row counts of " + detail::dims(a.rows(), a.cols()) + " and " +
                     detail::dims(b.rows(), b.cols()) + " differ");
  Matrix<T> r(a.cols(), b.cols(), top_of<T>());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = top_of<T>();
      for (std::size_t k = 0; k < a.rows(); ++k) acc = wedge(acc, lres(a(k, i), b(k, j)));
      r(i, j) = acc;
    }
  return r;
}

/// C/A, the greatest X with X ⊗ A ⪯ C: (C/A)ij = ∧k cik/ajk.
/// Scalars commute, so cik/ajk = ajk\cik.
template <Dioid T>
Matrix<T> right_residual(const Matrix<T>& c, const Matrix<T>& a) {
  if (c.cols() != a.cols())
    throw ShapeError("right residual: column counts of " + detail::dims(c.rows(), c.cols()) + " and " +
                     detail::dims(a.rows(), a.cols()) + " differ");
  Matrix<T> r(c.rows(), a.rows(), top_of<T>());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) {
      T acc = top_of<T>();
      for (std::size_t k = 0; k < c.cols(); ++k) acc = wedge(acc, lres(a(j, k), c(i, k)));
      r(i, j) = acc;
    }
  return r;
}

/// A⨸X, the smallest Y with A ⊙ Y ⪰ X: (A⨸X)ij = ⊕k aki⨸xkj
template <Dioid T>
Matrix<T> dual_residual(const Matrix<T>& a, const Matrix<T>& x) {
  if (a.rows() != x.rows())
    throw ShapeError("dual residual: row counts of " + detail::dims(a.rows(), a.cols()) + " and " +
                     detail::dims(x.rows(), x.cols()) + " differ");
  Matrix<T> r(a.cols(), x.cols(), eps_of<T>());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      T acc = eps_of<T>();
      for (std::size_t k = 0; k < a.rows(); ++k) acc = oplus(acc, dualres(a(k, i), x(k, j)));
      r(i, j) = acc;
    }
  return r;
}

/// A* = E ⊕ A ⊕ A² ⊕ …
///
/// Floyd-Warshall elimination using the scalar star of each pivot, so
/// circuits of positive weight saturate to ⊤ exactly.
template <Dioid T>
Matrix<T> kleene_star(const Matrix<T>& a) {
  detail::require_square(a, "star");
  const std::size_t n = a.rows();
  Matrix<T> m = a;
  for (std::size_t k = 0; k < n; ++k) {
    const T c = star(m(k, k));
    Matrix<T> next = m;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, k) == eps_of<T>()) continue;
      const T left = otimes(m(i, k), c);
      for (std::size_t j = 0; j < n; ++j) next(i, j) = oplus(m(i, j), otimes(left, m(k, j)));
    }
    m = std::move(next);
  }
  return mat_oplus(Matrix<T>::identity(n), m);
}

template <class T>
struct WedgeClosure {
  Matrix<T> value;
  /// Some dual circuit had a closure of ε, so the entries it reaches were
  /// driven down to ε rather than stabilising at a finite value.
  bool diverged = false;
};

/// B_* = E⊙ ∧ B ∧ B^⊙2 ∧ … with a divergence flag.
///
/// The dual Floyd-Warshall elimination over (∧, ⊙); exact, no iteration cap.
template <Dioid T>
WedgeClosure<T> wedge_closure_report(const Matrix<T>& b) {
  detail::require_square(b, "wedge closure");
  const std::size_t n = b.rows();
  WedgeClosure<T> out{b, false};
  Matrix<T>& m = out.value;
  for (std::size_t k = 0; k < n; ++k) {
    const T c = wedge_star(m(k, k));
    if (c == eps_of<T>() && m(k, k) != eps_of<T>()) out.diverged = true;
    Matrix<T> next = m;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, k) == top_of<T>()) continue;
      for (std::size_t j = 0; j < n; ++j) next(i, j) = wedge(m(i, j), odot(m(i, k), odot(c, m(k, j))));
    }
    m = std::move(next);
  }
  m = mat_wedge(Matrix<T>::dual_identity(n), m);
  return out;
}

template <Dioid T>
Matrix<T> wedge_closure(const Matrix<T>& b) {
  return wedge_closure_report(b).value;
}

/// B^⊙k, with B^⊙0 = E⊙.
template <Dioid T>
Matrix<T> dual_power(const Matrix<T>& b, std::size_t k) {
  detail::require_square(b, "dual power");
  Matrix<T> r = Matrix<T>::dual_identity(b.rows());
  for (std::size_t i = 0; i < k; ++i) r = mat_odot(r, b);
  return r;
}

/// B_* by the fixpoint iteration C ← C ∧ (C ⊙ B) from C = E⊙.
/// Throws DivergenceError when no fixpoint is reached within max_iter steps.
template <Dioid T>
Matrix<T> wedge_closure_iterate(const Matrix<T>& b, std::size_t max_iter) {
  detail::require_square(b, "wedge closure");
  Matrix<T> c = Matrix<T>::dual_identity(b.rows());
  for (std::size_t it = 0; it < max_iter; ++it) {
    Matrix<T> next = mat_wedge(c, mat_odot(c, b));
    if (next == c) return c;
    c = std::move(next);
  }
  throw DivergenceError("wedge closure did not stabilise within " + std::to_string(max_iter) + " iterations");
}

/// A ⪯ B entrywise.
template <Dioid T>
bool mat_leq(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b, "order");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!leq(a(i, j), b(i, j))) return false;
  return true;
}

template <Dioid T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

/// -Aᵀ over Z̄max, with ε and ⊤ exchanged. A\B = (-Aᵀ) ⊙ B.
inline Matrix<MaxPlus> negate_transpose(const Matrix<MaxPlus>& a) {
  Matrix<MaxPlus> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = negate(a(i, j));
  return r;
}

}  // namespace dioid
