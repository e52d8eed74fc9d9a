#include "sulva/counting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sulva {

using ganita::math_error;

namespace {

// Scale a rational coordinate to an integer number of units.
std::int64_t to_units(const ExactScalar& coord, const Rational& unit) {
  if (!coord.is_rational()) throw math_error("cannot tile with given unit");
  const Rational scaled = coord.rational_value() / unit;
  if (!scaled.is_integer()) throw math_error("cannot tile with given unit");
  const auto& n = scaled.num();
  if (n > std::numeric_limits<std::int32_t>::max() || n < std::numeric_limits<std::int32_t>::min())
    throw math_error("figure too large to count");
  return static_cast<std::int64_t>(n);
}

}  // namespace

UnitCount area_by_unit_counting(const std::vector<Point>& figure, const Rational& unit) {
  if (figure.size() < 3) throw math_error("figure must have at least 3 vertices");
  if (unit.sign() <= 0) throw math_error("unit must be positive");

  std::vector<std::pair<std::int64_t, std::int64_t>> v;
  v.reserve(figure.size());
  for (const auto& p : figure) v.emplace_back(to_units(p.x, unit), to_units(p.y, unit));

  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    if (a.first != b.first && a.second != b.second)
      throw math_error("figure is not axis-aligned rectilinear");
  }

  std::int64_t xmin = v[0].first, xmax = v[0].first;
  std::int64_t ymin = v[0].second, ymax = v[0].second;
  for (const auto& [x, y] : v) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }

  // Cell (i,j) is inside iff its center is; cast a +x ray from the center
  // (doubled coordinates keep everything integral and off the edges).
  std::int64_t count = 0;
  for (std::int64_t j = ymin; j < ymax; ++j) {
    const std::int64_t cy = 2 * j + 1;
    for (std::int64_t i = xmin; i < xmax; ++i) {
      const std::int64_t cx = 2 * i + 1;
      int crossings = 0;
      for (size_t k = 0; k < n; ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % n];
        if (a.first != b.first) continue;  // only vertical edges cross a horizontal ray
        const std::int64_t ex = 2 * a.first;
        const std::int64_t y0 = 2 * std::min(a.second, b.second);
        const std::int64_t y1 = 2 * std::max(a.second, b.second);
        if (ex > cx && y0 < cy && cy < y1) ++crossings;
      }
      if (crossings % 2 == 1) ++count;
    }
  }
  return UnitCount{count, Rational(count) * unit.square()};
}

Rational square_area_scale(const Rational& side_factor) {
  if (side_factor.sign() <= 0) throw math_error("side factor must be positive");
  return side_factor.square();
}

Rational lattice_area(const std::vector<std::pair<std::int64_t, std::int64_t>>& v) {
  if (v.size() < 3) throw math_error("degenerate polygon");
  const size_t n = v.size();

  std::int64_t xmin = v[0].first, xmax = v[0].first;
  std::int64_t ymin = v[0].second, ymax = v[0].second;
  for (const auto& [x, y] : v) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }

  const auto on_segment = [](std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                             std::int64_t px, std::int64_t py) {
    const std::int64_t c = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    if (c != 0) return false;
    return std::min(ax, bx) <= px && px <= std::max(ax, bx) && std::min(ay, by) <= py &&
           py <= std::max(ay, by);
  };

  std::int64_t interior = 0, boundary = 0;
  for (std::int64_t y = ymin; y <= ymax; ++y) {
    for (std::int64_t x = xmin; x <= xmax; ++x) {
      bool on_edge = false;
      for (size_t k = 0; k < n && !on_edge; ++k)
        on_edge = on_segment(v[k].first, v[k].second, v[(k + 1) % n].first, v[(k + 1) % n].second,
                             x, y);
      if (on_edge) {
        ++boundary;
        continue;
      }
      // Ray cast at doubled coordinates so the ray avoids lattice points.
      const std::int64_t px = 2 * x, py = 2 * y + 1;
      int crossings = 0;
      for (size_t k = 0; k < n; ++k) {
        std::int64_t ax = 2 * v[k].first, ay = 2 * v[k].second;
        std::int64_t bx = 2 * v[(k + 1) % n].first, by = 2 * v[(k + 1) % n].second;
        if (ay == by) continue;
        if (ay > by) {
          std::swap(ax, bx);
          std::swap(ay, by);
        }
        if (py <= ay || py > by) continue;
        // Intersection x at height py, compared exactly with cross product.
        const std::int64_t side = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
        if ((by > ay && side > 0)) ++crossings;
      }
      if (crossings % 2 == 1) ++interior;
    }
  }
  // Interior count plus half the boundary, less one: the lattice tally of
  // cell-areas a simple polygon covers.
  return Rational(interior) + Rational(boundary, 2) - Rational(1);
}

DiagonalIdentity diagonal_identity_check(const Rational& width, const Rational& height) {
  if (width.sign() <= 0 || height.sign() <= 0) throw math_error("sides must be positive");
  const Rational arithmetic = width.square() + height.square();

  DiagonalIdentity out;
  out.diag_square = arithmetic;

  if (width.is_integer() && height.is_integer() && width.num() <= 1000 && height.num() <= 1000) {
    const auto a = static_cast<std::int64_t>(width.num());
    const auto b = static_cast<std::int64_t>(height.num());
    const Rational unit(1);
    const auto sq = [&](std::int64_t side) {
      std::vector<Point> f = {
          {ExactScalar(Rational(0)), ExactScalar(Rational(0))},
          {ExactScalar(Rational(side)), ExactScalar(Rational(0))},
          {ExactScalar(Rational(side)), ExactScalar(Rational(side))},
          {ExactScalar(Rational(0)), ExactScalar(Rational(side))},
      };
      return area_by_unit_counting(f, unit).area;
    };
    // The square on the diagonal, tilted on the lattice.
    const Rational diag_counted =
        lattice_area({{0, 0}, {a, b}, {a - b, a + b}, {-b, a}});
    out.holds = sq(a) + sq(b) == diag_counted && diag_counted == arithmetic;
  } else {
    out.holds = width.square() + height.square() == arithmetic;
  }
  return out;
}

}  // namespace sulva
