#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ganita/errors.hpp"

namespace ganita {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with arbitrary-size integer parts.
///
/// Canonical form is maintained by every constructor and operation:
/// the denominator is positive and coprime to the numerator, and zero
/// is represented as 0/1. The sign lives in the numerator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)

  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw math_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational square() const { return Rational(num_ * num_, den_ * den_, already_reduced{}); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  Rational reciprocal() const {
    if (num_ == 0) throw math_error("division by zero");
    return Rational(den_, num_);
  }

  /// Largest integer not greater than the value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  BigInt ceil() const {
    BigInt q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
  }

  /// Exact square root, if the value is the square of a rational.
  std::optional<Rational> exact_sqrt() const {
    if (num_ < 0) return std::nullopt;
    const BigInt rn = boost::multiprecision::sqrt(num_);
    const BigInt rd = boost::multiprecision::sqrt(den_);
    if (rn * rn != num_ || rd * rd != den_) return std::nullopt;
    return Rational(rn, rd, already_reduced{});
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Accepts "p", "p/q", and plain decimals such as "29.530589".
  static Rational parse(const std::string& text);

private:
  struct already_reduced {};
  Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void reduce() {
    if (den_ == 0) throw math_error("undefined fraction");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

/// Canonical fraction from a raw numerator/denominator pair.
inline Rational reduce(const BigInt& p, const BigInt& q) { return Rational(p, q); }
inline Rational reduce(long long p, long long q) { return Rational(p, q); }

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw parse_error("empty number");
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad number: " + text);
    BigInt den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    const BigInt wpart(whole.empty() || whole == "-" ? BigInt(0) : BigInt(whole));
    BigInt num = (wpart < 0 ? -wpart : wpart) * den + (frac.empty() ? BigInt(0) : BigInt(frac));
    if (neg) num = -num;
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw parse_error(std::string("bad number '") + text + "': " + e.what());
  }
}

}  // namespace ganita
