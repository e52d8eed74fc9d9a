#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "ganita/rational.hpp"

namespace ganita {

/// A karaṇī-style quantity: either a Rational or coefficient·√radicand.
///
/// Stored uniformly as coeff·√radicand with radicand a positive integer;
/// radicand 1 means the value is plain rational. Normalization folds
/// perfect-square radicands into the coefficient, so surd-ness of a value
/// is canonical and comparisons never need floating point.
///
/// The type closes under multiplication and division. Addition closes
/// only among rationals or among surds with equal radicand; anything else
/// raises inexact_error and the caller picks an approximate path.
class ExactScalar {
public:
  ExactScalar() : coeff_(0), radicand_(1) {}
  ExactScalar(Rational r) : coeff_(std::move(r)), radicand_(1) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(long long n) : coeff_(n), radicand_(1) {}            // NOLINT(google-explicit-constructor)

  /// coefficient·√radicand. The radicand must be positive.
  static ExactScalar surd(Rational coefficient, Rational radicand) {
    if (radicand.sign() <= 0) throw math_error("surd radicand must be positive");
    ExactScalar s;
    s.coeff_ = std::move(coefficient);
    s.radicand_ = std::move(radicand);
    s.normalize();
    return s;
  }

  /// Exact square root of a nonnegative rational.
  static ExactScalar sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw math_error("square root of negative rational");
    if (r.is_zero()) return ExactScalar(Rational(0));
    return surd(Rational(1), r);
  }

  bool is_rational() const { return radicand_ == Rational(1); }
  bool is_surd() const { return !is_rational(); }
  bool is_zero() const { return coeff_.is_zero(); }
  int sign() const { return coeff_.sign(); }

  /// Only valid for rational kind.
  const Rational& rational_value() const {
    if (!is_rational()) throw inexact_error("surd has no rational value");
    return coeff_;
  }
  const Rational& coefficient() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  /// The square of any ExactScalar is rational.
  Rational square() const { return coeff_.square() * radicand_; }

  ExactScalar operator-() const {
    ExactScalar r = *this;
    r.coeff_ = -r.coeff_;
    return r;
  }

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ != b.radicand_)
      throw inexact_error("inexact: cannot add " + a.str() + " and " + b.str());
    ExactScalar r;
    r.coeff_ = a.coeff_ + b.coeff_;
    r.radicand_ = a.radicand_;
    if (r.coeff_.is_zero()) r.radicand_ = Rational(1);
    return r;
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero() || b.is_zero()) return ExactScalar(Rational(0));
    return surd(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.is_zero()) throw math_error("division by zero");
    // 1/(c·√r) = (1/(c·r))·√r
    ExactScalar inv;
    inv.coeff_ = (b.coeff_ * b.radicand_).reciprocal();
    inv.radicand_ = b.radicand_;
    return a * inv;
  }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

  /// Total order by sign analysis plus exact comparison of squares.
  friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa <=> sb;
    if (sa == 0) return std::strong_ordering::equal;
    const auto sq = a.square() <=> b.square();
    return sa > 0 ? sq : (0 <=> sq);
  }

  double to_double() const {
    double v = coeff_.to_double();
    if (is_surd()) v *= std::sqrt(radicand_.to_double());
    return v;
  }

  std::string str() const {
    if (is_rational()) return coeff_.str();
    if (coeff_ == Rational(1)) return "sqrt(" + radicand_.str() + ")";
    if (coeff_ == Rational(-1)) return "-sqrt(" + radicand_.str() + ")";
    return coeff_.str() + "*sqrt(" + radicand_.str() + ")";
  }

private:
  void normalize() {
    if (coeff_.is_zero()) {
      radicand_ = Rational(1);
      return;
    }
    // c·√(p/q) = (c/q)·√(pq): keep the radicand an integer.
    if (!radicand_.is_integer()) {
      coeff_ = coeff_ / Rational(radicand_.den());
      radicand_ = Rational(radicand_.num() * radicand_.den());
    }
    // Pull perfect-square factors out of the radicand.
    BigInt n = radicand_.num();
    BigInt root = boost::multiprecision::sqrt(n);
    if (root * root == n) {
      coeff_ = coeff_ * Rational(root);
      radicand_ = Rational(1);
      return;
    }
    // Square-free extraction by trial division, for desk-scale radicands.
    if (n <= BigInt(1'000'000'000'000LL)) {
      std::int64_t m = static_cast<std::int64_t>(n);
      std::int64_t out = 1;
      for (std::int64_t f = 2; f * f <= m; ++f) {
        while (m % (f * f) == 0) {
          m /= f * f;
          out *= f;
        }
      }
      if (out != 1) {
        coeff_ = coeff_ * Rational(out);
        radicand_ = Rational(m);
      }
    }
  }

  Rational coeff_;
  Rational radicand_;  // positive integer; 1 <=> rational kind
};

}  // namespace ganita
