#include "sulva/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sulva {

using ganita::inexact_error;
using ganita::math_error;

std::string figure_class_name(FigureClass c) {
  switch (c) {
    case FigureClass::caturasra: return "caturasra";
    case FigureClass::samacaturasra: return "samacaturasra";
    case FigureClass::ubhayatahprauga: return "ubhayatahprauga";
    case FigureClass::prauga: return "prauga";
    case FigureClass::dirghacaturasra: return "dirghacaturasra";
    case FigureClass::other: return "other";
  }
  return "other";
}

OrientedLine prachi_from_shadow_points(const Point& morning, const Point& evening,
                                       const ShadowCircle& circle) {
  if (morning == evening) throw math_error("degenerate shadow observation");
  const Rational r2 = circle.radius.square();
  if (dist2(morning, circle.center) != r2 || dist2(evening, circle.center) != r2)
    throw math_error("invalid observation: shadow point off the circle");
  // Morning shadow points west of the gnomon, so the sunrise mark is the
  // west end and the line runs west -> east.
  return OrientedLine{morning, evening};
}

ApproxOrientedLine prachi_from_shadow_points(const ApproxPoint& morning,
                                             const ApproxPoint& evening,
                                             const ApproxPoint& center, double radius) {
  const double tol = std::max({morning.tol, evening.tol, center.tol});
  const auto on_circle = [&](const ApproxPoint& p) {
    const double d = std::hypot(p.x - center.x, p.y - center.y);
    return std::abs(d - radius) <= tol;
  };
  if (std::abs(morning.x - evening.x) <= tol && std::abs(morning.y - evening.y) <= tol)
    throw math_error("degenerate shadow observation");
  if (!on_circle(morning) || !on_circle(evening))
    throw math_error("invalid observation: shadow point off the circle");
  return ApproxOrientedLine{morning, evening};
}

namespace {

CordPerpendicular approx_perpendicular(const Point& a, const Point& b, const Point& c,
                                       const ExactScalar& cord_length) {
  const double ax = a.x.to_double(), ay = a.y.to_double();
  const double bx = b.x.to_double(), by = b.y.to_double();
  const double cx = c.x.to_double(), cy = c.y.to_double();
  const double half = cord_length.to_double() / 2.0;
  const double d2 = (ax - cx) * (ax - cx) + (ay - cy) * (ay - cy);
  const double h = std::sqrt(half * half - d2);
  const double abx = bx - ax, aby = by - ay;
  const double ablen = std::hypot(abx, aby);
  // unit normal, then pick the north (greater y, tie west) side for P
  double nx = -aby / ablen, ny = abx / ablen;
  if (ny < 0 || (ny == 0 && nx > 0)) {
    nx = -nx;
    ny = -ny;
  }
  CordPerpendicular out;
  out.exact = false;
  out.pa = ApproxPoint{cx + nx * h, cy + ny * h, 1e-9};
  out.qa = ApproxPoint{cx - nx * h, cy - ny * h, 1e-9};
  return out;
}

}  // namespace

CordPerpendicular perpendicular_via_cord(const Point& a, const Point& b, const Point& c,
                                         const ExactScalar& cord_length) {
  const Rational d2a = dist2(c, a);
  const Rational d2b = dist2(c, b);
  if (d2a != d2b) throw math_error("pegs not equidistant from C");
  // Midpoint, not merely equidistant: C must lie on AB.
  try {
    const ExactScalar col = cross(b - a, c - a);
    if (!col.is_zero()) throw math_error("pegs not equidistant from C");
  } catch (const inexact_error&) {
    // fall through; the approximate path re-checks nothing beyond distances
  }
  const Rational half2 = cord_length.square() * Rational(1, 4);
  const Rational h2 = half2 - d2a;
  if (h2.sign() <= 0) throw math_error("cord too short to stretch taut");

  const Rational ab2 = dist2(a, b);
  if (ab2.is_zero()) throw math_error("pegs A and B coincide");

  try {
    // P = C ± s·perp(B-A) with s = sqrt(h² / |AB|²).
    const ExactScalar s = ExactScalar::sqrt_of(h2 / ab2);
    const Vec ab = b - a;
    const ExactScalar ox = -ab.y * s;
    const ExactScalar oy = ab.x * s;
    Point p{c.x + ox, c.y + oy};
    Point q{c.x - ox, c.y - oy};
    const auto yc = p.y <=> q.y;
    if (yc < 0 || (yc == 0 && p.x > q.x)) std::swap(p, q);
    return CordPerpendicular{true, p, q, {}, {}};
  } catch (const inexact_error&) {
    return approx_perpendicular(a, b, c, cord_length);
  }
}

namespace {

int orientation_sign(const Point& a, const Point& b, const Point& p) {
  return cross(b - a, p - a).sign();
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation_sign(a, b, c);
  const int o2 = orientation_sign(a, b, d);
  const int o3 = orientation_sign(c, d, a);
  const int o4 = orientation_sign(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace

FigureClass classify_quadrilateral(const std::array<Point, 4>& v) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (v[i] == v[j]) throw math_error("not a simple quadrilateral");
  for (int i = 0; i < 4; ++i)
    if (orientation_sign(v[i], v[(i + 1) % 4], v[(i + 2) % 4]) == 0)
      throw math_error("not a simple quadrilateral");
  if (segments_cross(v[0], v[1], v[2], v[3]) || segments_cross(v[1], v[2], v[3], v[0]))
    throw math_error("not a simple quadrilateral");

  const Rational s0 = dist2(v[0], v[1]);
  const Rational s1 = dist2(v[1], v[2]);
  const Rational s2 = dist2(v[2], v[3]);
  const Rational s3 = dist2(v[3], v[0]);
  const Rational diag0 = dist2(v[0], v[2]);
  const Rational diag1 = dist2(v[1], v[3]);

  const bool all_sides = s0 == s1 && s1 == s2 && s2 == s3;
  const bool opp_sides = s0 == s2 && s1 == s3;
  const bool diags = diag0 == diag1;

  if (all_sides && diags) return FigureClass::samacaturasra;
  if (all_sides) return FigureClass::ubhayatahprauga;
  if (opp_sides && diags) return FigureClass::dirghacaturasra;
  return FigureClass::caturasra;
}

ExactScalar altar_scale_factor(const Rational& old_area, const Rational& new_area) {
  if (old_area.sign() <= 0 || new_area.sign() <= 0)
    throw math_error("altar areas must be positive");
  return ExactScalar::sqrt_of(new_area / old_area);
}

std::vector<SquarePart> decompose_square(const Rational& x, const Rational& y) {
  if (x.sign() <= 0 || y.sign() <= 0) throw math_error("zero side");
  const Rational xy = x * y;
  return {
      {"X-square", x.square()},
      {"Y-square", y.square()},
      {"rectangle", xy},
      {"rectangle", xy},
  };
}

}  // namespace sulva
