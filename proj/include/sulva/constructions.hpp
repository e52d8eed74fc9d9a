#pragma once

#include <array>
#include <string>
#include <vector>

#include "ganita/units.hpp"
#include "sulva/point.hpp"

namespace sulva {

using ganita::Length;

/// Quadrilateral vocabulary of the sūtras.
enum class FigureClass {
  caturasra,        // generic quadrilateral
  samacaturasra,    // square
  ubhayatahprauga,  // rhombus
  prauga,           // isosceles triangle (half rhombus)
  dirghacaturasra,  // rectangle
  other,
};

std::string figure_class_name(FigureClass c);

/// East-west line fixed from the two shadow crossings; `west` is the
/// morning mark, `east` the evening mark.
struct OrientedLine {
  Point west;
  Point east;
};

struct ShadowCircle {
  Point center;
  ExactScalar radius;
};

struct ApproxOrientedLine {
  ApproxPoint west;
  ApproxPoint east;
};

/// KS 1.2: the prāchī through the sunrise/sunset shadow points.
OrientedLine prachi_from_shadow_points(const Point& morning, const Point& evening,
                                       const ShadowCircle& circle);
ApproxOrientedLine prachi_from_shadow_points(const ApproxPoint& morning,
                                             const ApproxPoint& evening,
                                             const ApproxPoint& center, double radius);

/// KS 1.3 result. When the exact coordinate closure fails the points are
/// reported approximately and `exact` is false.
struct CordPerpendicular {
  bool exact = true;
  Point p, q;          // valid when exact
  ApproxPoint pa, qa;  // valid when !exact
};

/// Stretch a cord of length L tied at A and B, its midpoint mark pulled
/// taut north of C and then south. C must be the midpoint of AB, L > |AB|.
CordPerpendicular perpendicular_via_cord(const Point& a, const Point& b, const Point& c,
                                         const ExactScalar& cord_length);

FigureClass classify_quadrilateral(const std::array<Point, 4>& vertices);

/// Linear scale factor whose square is new_area/old_area (a karaṇī value).
ExactScalar altar_scale_factor(const Rational& old_area, const Rational& new_area);

/// Partition of the (X+Y) square: two squares and two rectangles.
struct SquarePart {
  std::string label;
  Rational area;
};
std::vector<SquarePart> decompose_square(const Rational& x, const Rational& y);

}  // namespace sulva
