#include "dioid/oracle.hpp"

#include <cmath>

#include "dioid/errors.hpp"

namespace dioid::oracle {

namespace {

using M = Matrix<MaxPlus>;

M naive_otimes(const M& a, const M& x) {
  M r(a.rows(), x.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) r(i, j) = oplus(r(i, j), otimes(a(i, k), x(k, j)));
  return r;
}

M naive_odot(const M& a, const M& x) {
  M r(a.rows(), x.cols(), MaxPlus::top());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) r(i, j) = wedge(r(i, j), odot(a(i, k), x(k, j)));
  return r;
}

bool below(const M& a, const M& b) {
  for (std::size_t i = 0; i < a.data().size(); ++i)
    if (b.data()[i] < a.data()[i]) return false;
  return true;
}

}  // namespace

std::vector<MaxPlus> Grid::values() const {
  std::vector<MaxPlus> v;
  if (include_eps) v.push_back(MaxPlus::eps());
  for (std::int64_t x = lo; x <= hi; ++x) v.emplace_back(x);
  if (include_top) v.push_back(MaxPlus::top());
  return v;
}

bool Grid::contains(MaxPlus v) const {
  if (v.is_eps()) return include_eps;
  if (v.is_top()) return include_top;
  return lo <= v.value() && v.value() <= hi;
}

MaxPlus Grid::clamp_down(MaxPlus v) const {
  MaxPlus best = MaxPlus::eps();
  for (MaxPlus g : values())
    if (g <= v) best = g;
  return best;
}

MaxPlus Grid::clamp_up(MaxPlus v) const {
  auto vals = values();
  for (MaxPlus g : vals)
    if (v <= g) return g;
  return MaxPlus::top();
}

// The solutions of A ⊗ X ⪯ B are closed under ⊕ and downward, so the
// greatest one is the join of the largest admissible value of each entry
// taken alone.
M greatest_subsolution(const M& a, const M& b, const Grid& grid) {
  if (a.rows() != b.rows()) throw ShapeError("greatest_subsolution: row counts differ");
  const auto vals = grid.values();
  M x(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (MaxPlus v : vals) {
        M probe(a.cols(), b.cols());
        probe(i, j) = v;
        if (below(naive_otimes(a, probe), b)) x(i, j) = v;
      }
    }
  return x;
}

M smallest_supersolution(const M& a, const M& b, const Grid& grid) {
  if (a.rows() != b.rows()) throw ShapeError("smallest_supersolution: row counts differ");
  const auto vals = grid.values();
  M x(a.cols(), b.cols(), vals.back());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (auto it = vals.rbegin(); it != vals.rend(); ++it) {
        M probe(a.cols(), b.cols(), MaxPlus::top());
        probe(i, j) = *it;
        if (below(b, naive_odot(a, probe))) x(i, j) = *it;
      }
    }
  return x;
}

M star_by_powers(const M& a, std::size_t k_max) {
  if (a.rows() != a.cols()) throw ShapeError("star_by_powers: matrix is not square");
  const std::size_t n = a.rows();
  M sum = M::identity(n);
  M power = M::identity(n);
  M at_k = sum;
  for (std::size_t k = 1; k <= 2 * k_max; ++k) {
    power = naive_otimes(power, a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sum(i, j) = oplus(sum(i, j), power(i, j));
    if (k == k_max) at_k = sum;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sum(i, j) != at_k(i, j)) at_k(i, j) = MaxPlus::top();
  return at_k;
}

M projector_by_enumeration(const M& a, const M& b, const M& x0, const Grid& grid) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != n || x0.rows() != n)
    throw ShapeError("projector_by_enumeration: inconsistent shapes");
  const auto vals = grid.values();
  const std::size_t cells = x0.rows() * x0.cols();
  if (std::pow(static_cast<double>(vals.size()), static_cast<double>(cells)) > 1.2e6)
    throw ShapeError("projector_by_enumeration: instance too large to enumerate");

  // Odometer over the grid values admissible in each cell (those ⪯ X0).
  std::vector<std::vector<MaxPlus>> choices(cells);
  for (std::size_t c = 0; c < cells; ++c)
    for (MaxPlus v : vals)
      if (v <= x0.data()[c]) choices[c].push_back(v);
  M join(x0.rows(), x0.cols());
  for (const auto& ch : choices)
    if (ch.empty()) return join;
  std::vector<std::size_t> idx(cells, 0);
  M y(x0.rows(), x0.cols());
  while (true) {
    for (std::size_t c = 0; c < cells; ++c) y(c / x0.cols(), c % x0.cols()) = choices[c][idx[c]];
    if (below(naive_otimes(a, y), y) && below(y, naive_odot(b, y)))
      for (std::size_t c = 0; c < cells; ++c)
        join(c / x0.cols(), c % x0.cols()) = oplus(join(c / x0.cols(), c % x0.cols()), y.data()[c]);
    std::size_t c = 0;
    while (c < cells && ++idx[c] == choices[c].size()) idx[c++] = 0;
    if (c == cells) break;
  }
  return join;
}

}  // namespace dioid::oracle
