#pragma once

#include <cstdint>
#include <vector>

#include "dioid/matrix.hpp"
#include "dioid/scalar.hpp"

/// Brute-force reference computations over Z̄max. They enumerate values
/// from a bounded grid and use their own naive products, so they share no
/// code path with the optimised operations they are compared against.
namespace dioid::oracle {

struct Grid {
  std::int64_t lo = -20;
  std::int64_t hi = 20;
  bool include_eps = true;
  bool include_top = true;

  /// All grid values in increasing order.
  std::vector<MaxPlus> values() const;
  bool contains(MaxPlus v) const;
  /// Greatest grid value ⪯ v. Requires include_eps or v ⪰ lo.
  MaxPlus clamp_down(MaxPlus v) const;
  /// Smallest grid value ⪰ v. Requires include_top or v ⪯ hi.
  MaxPlus clamp_up(MaxPlus v) const;
};

/// Greatest X over the grid with A ⊗ X ⪯ B.
Matrix<MaxPlus> greatest_subsolution(const Matrix<MaxPlus>& a, const Matrix<MaxPlus>& b, const Grid& grid = {});

/// Smallest X over the grid with A ⊙ X ⪰ B.
Matrix<MaxPlus> smallest_supersolution(const Matrix<MaxPlus>& a, const Matrix<MaxPlus>& b, const Grid& grid = {});

/// E ⊕ A ⊕ … ⊕ A^k_max; entries still growing between k_max and 2·k_max are ⊤.
Matrix<MaxPlus> star_by_powers(const Matrix<MaxPlus>& a, std::size_t k_max);

/// ⊕ of every grid Y ⪯ X0 with A ⊗ Y ⪯ Y ⪯ B ⊙ Y. Throws ShapeError when the
/// enumeration would exceed about a million points.
Matrix<MaxPlus> projector_by_enumeration(const Matrix<MaxPlus>& a, const Matrix<MaxPlus>& b,
                                         const Matrix<MaxPlus>& x0, const Grid& grid = {});

}  // namespace dioid::oracle
