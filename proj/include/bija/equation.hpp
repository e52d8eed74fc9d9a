#pragma once

#include <string>

#include "ganita/exact_scalar.hpp"

namespace bija {

using ganita::ExactScalar;
using ganita::Rational;

/// One side of an equation: yāva·x² + yā·x + rū with exact coefficients.
struct Paksha {
  Rational yava;  // coefficient of x²
  Rational ya;    // coefficient of x
  Rational ru;    // absolute term

  friend bool operator==(const Paksha&, const Paksha&) = default;

  bool is_zero() const { return yava.is_zero() && ya.is_zero() && ru.is_zero(); }

  /// Value at x. Exact whenever the terms stay in the scalar closure
  /// (always for rational x; for a surd x only when yā vanishes or the
  /// pieces share a radicand).
  ExactScalar evaluate(const ExactScalar& x) const {
    return ExactScalar(yava * x.square()) + ExactScalar(ya) * x + ExactScalar(ru);
  }

  std::string str(const std::string& var = "x") const;
};

struct Equation {
  Paksha left;
  Paksha right;

  friend bool operator==(const Equation&, const Equation&) = default;

  std::string str() const;
};

/// samī-karaṇa: move everything to the left, zero on the right, leading
/// nonzero coefficient positive. Solution set is preserved.
/// Errors: identical sides → "identity equation (indeterminate)";
/// 0 = nonzero → "inconsistent equation".
Equation normalize(const Equation& e);

/// Multiply both sides by the least common denominator so that every
/// coefficient is an integer (notation accepts integers only).
Equation clear_denominators(const Equation& e);

}  // namespace bija
