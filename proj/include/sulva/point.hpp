#pragma once

#include "ganita/exact_scalar.hpp"

namespace sulva {

using ganita::ExactScalar;
using ganita::Rational;

/// Ground-plane point with exact coordinates (abstract length units).
struct Point {
  ExactScalar x;
  ExactScalar y;

  friend bool operator==(const Point& a, const Point& b) = default;
};

/// Fallback representation when a construction leaves the exact closure.
/// Every predicate on ApproxPoints consults the carried tolerance.
struct ApproxPoint {
  double x = 0;
  double y = 0;
  double tol = 1e-9;
};

inline ApproxPoint approximate(const Point& p, double tol = 1e-9) {
  return ApproxPoint{p.x.to_double(), p.y.to_double(), tol};
}

/// Displacement b - a as a coordinate pair. May raise inexact_error.
struct Vec {
  ExactScalar x;
  ExactScalar y;
};

inline Vec operator-(const Point& b, const Point& a) { return Vec{b.x - a.x, b.y - a.y}; }

inline ExactScalar dot(const Vec& u, const Vec& v) { return u.x * v.x + u.y * v.y; }
inline ExactScalar cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }

/// Squared distance. Squares of exact scalars are always rational, so this
/// stays exact whenever the coordinate subtractions do.
inline Rational dist2(const Point& a, const Point& b) {
  const Vec d = b - a;
  return d.x.square() + d.y.square();
}

}  // namespace sulva
