#pragma once

#include <cstdint>
#include <vector>

#include "sulva/point.hpp"

namespace sulva {

struct UnitCount {
  std::int64_t count = 0;  // unit x unit cells inside the figure
  Rational area;           // count · unit²
};

/// KS 3.7: area of an axis-aligned rectilinear polygon by counting the
/// unit squares that tile it. Every vertex coordinate must be an integer
/// multiple of `unit`.
UnitCount area_by_unit_counting(const std::vector<Point>& figure, const Rational& unit);

/// KS 3.6/3.12: area ratio of a square when its side is scaled.
Rational square_area_scale(const Rational& side_factor);

struct DiagonalIdentity {
  Rational diag_square;  // width² + height²
  bool holds = false;    // counting route agreed with the arithmetic route
};

/// BS 1.48/KS 2.11: the square on the diagonal of a width×height rectangle
/// carries the areas of the squares on the two sides. For integer sides the
/// diagonal square (a tilted lattice square) is measured by lattice
/// counting; otherwise exact arithmetic is used on both routes.
DiagonalIdentity diagonal_identity_check(const Rational& width, const Rational& height);

/// Lattice-counting area oracle for a simple polygon with integer vertices:
/// interior points + boundary points/2 - 1.
Rational lattice_area(const std::vector<std::pair<std::int64_t, std::int64_t>>& vertices);

}  // namespace sulva
