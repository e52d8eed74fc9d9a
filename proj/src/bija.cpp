#include "bija/solve.hpp"

#include <algorithm>
#include <cassert>

namespace bija {

using ganita::BigInt;
using ganita::inexact_error;
using ganita::math_error;

namespace {

std::string term(const Rational& c, const std::string& power, bool& first) {
  if (c.is_zero()) return "";
  std::string out;
  if (first) {
    out = c.str();
    first = false;
  } else {
    out = (c.sign() > 0 ? " + " : " - ") + c.abs().str();
  }
  if (!power.empty()) out += "*" + power;
  return out;
}

}  // namespace

std::string Paksha::str(const std::string& var) const {
  bool first = true;
  std::string out;
  out += term(yava, var + "^2", first);
  out += term(ya, var, first);
  out += term(ru, "", first);
  return out.empty() ? "0" : out;
}

std::string Equation::str() const { return left.str() + " = " + right.str(); }

Equation normalize(const Equation& e) {
  Paksha d{e.left.yava - e.right.yava, e.left.ya - e.right.ya, e.left.ru - e.right.ru};
  if (d.is_zero()) throw math_error("identity equation (indeterminate)");
  if (d.yava.is_zero() && d.ya.is_zero()) throw math_error("inconsistent equation");
  const Rational lead = !d.yava.is_zero() ? d.yava : d.ya;
  if (lead.sign() < 0) d = Paksha{-d.yava, -d.ya, -d.ru};
  return Equation{d, Paksha{}};
}

Equation clear_denominators(const Equation& e) {
  BigInt l = 1;
  for (const Rational* c : {&e.left.yava, &e.left.ya, &e.left.ru, &e.right.yava, &e.right.ya,
                            &e.right.ru})
    l = boost::multiprecision::lcm(l, c->den());
  const Rational m{l};
  const auto scale = [&](const Paksha& p) {
    return Paksha{p.yava * m, p.ya * m, p.ru * m};
  };
  return Equation{scale(e.left), scale(e.right)};
}

std::string solve_step_label_name(SolveStepLabel label) {
  switch (label) {
    case SolveStepLabel::clear_denominators: return "clear-denominators";
    case SolveStepLabel::multiply_by_4a: return "multiply-by-4a";
    case SolveStepLabel::add_b_squared: return "add-b-squared";
    case SolveStepLabel::complete_square: return "complete-square";
    case SolveStepLabel::extract_root: return "extract-root";
    case SolveStepLabel::isolate: return "isolate";
  }
  return "?";
}

Rational solve_linear(const Rational& a1, const Rational& b1, const Rational& a2,
                      const Rational& b2) {
  if (a1 == a2) {
    if (b1 == b2) throw math_error("identity equation (indeterminate)");
    throw math_error("inconsistent equation");
  }
  const Rational x = (b2 - b1) / (a1 - a2);
  assert(a1 * x + b1 == a2 * x + b2);
  return x;
}

std::pair<Roots, SolveTrace> solve_quadratic_madhyamaharana(const Equation& input) {
  const Equation norm = normalize(input);
  const Rational a = norm.left.yava;
  if (a.is_zero()) throw math_error("not quadratic (use solve_linear)");
  const Rational b = norm.left.ya;
  const Rational c = -norm.left.ru;  // work on a·x² + b·x = c

  SolveTrace trace;
  trace.input = input;
  Equation eq{Paksha{a, b, Rational(0)}, Paksha{Rational(0), Rational(0), c}};

  if (!a.is_integer() || !b.is_integer() || !c.is_integer()) {
    eq = clear_denominators(eq);
    trace.entries.push_back({SolveStepLabel::clear_denominators, eq, ""});
  }
  const Rational ai = eq.left.yava, bi = eq.left.ya, ci = eq.right.ru;

  const Rational four_a = Rational(4) * ai;
  eq = Equation{Paksha{ai * four_a, bi * four_a, Rational(0)},
                Paksha{Rational(0), Rational(0), ci * four_a}};
  trace.entries.push_back({SolveStepLabel::multiply_by_4a, eq, ""});

  eq.left.ru += bi.square();
  eq.right.ru += bi.square();
  trace.entries.push_back({SolveStepLabel::add_b_squared, eq, ""});

  // The left side must now read (2a·x + b)²; checked via the expansion.
  const Rational two_a = Rational(2) * ai;
  if (!(eq.left.yava == two_a.square() && eq.left.ya == Rational(2) * two_a * bi &&
        eq.left.ru == bi.square()))
    throw math_error("completing the square failed");
  const Rational disc = eq.right.ru;  // 4ac + b²
  trace.entries.push_back(
      {SolveStepLabel::complete_square, eq,
       "(" + two_a.str() + "*x + " + bi.str() + ")^2 = " + disc.str()});

  if (disc.sign() < 0) throw math_error("no real root");
  const ExactScalar root = ExactScalar::sqrt_of(disc);
  trace.entries.push_back({SolveStepLabel::extract_root, eq,
                           two_a.str() + "*x + " + bi.str() + " = ±" + root.str()});

  // x = (-b ± √disc) / 2a, representable when the root is rational or
  // b vanishes (pure surd); anything else needs a two-term radical form.
  Roots roots;
  if (root.is_rational()) {
    const Rational r = root.rational_value();
    const Rational x1 = (-bi - r) / two_a;
    const Rational x2 = (-bi + r) / two_a;
    roots.values.push_back(ExactScalar(std::min(x1, x2)));
    if (x1 != x2) roots.values.push_back(ExactScalar(std::max(x1, x2)));
  } else if (bi.is_zero()) {
    const ExactScalar x2 = root / ExactScalar(two_a);
    roots.values.push_back(-x2 < x2 ? -x2 : x2);
    roots.values.push_back(-x2 < x2 ? x2 : -x2);
  } else {
    throw inexact_error("roots are not representable as a single surd term");
  }
  roots.admissible.assign(roots.values.size(), true);

  std::string note;
  for (const auto& v : roots.values) note += (note.empty() ? "x = " : ", x = ") + v.str();
  trace.entries.push_back({SolveStepLabel::isolate, eq, note});

  for (const auto& v : roots.values) assert(normalize(input).left.evaluate(v).is_zero());
  return {std::move(roots), std::move(trace)};
}

std::pair<Roots, SolveTrace> solve(const Equation& e) {
  const Equation norm = normalize(e);
  if (!norm.left.yava.is_zero()) return solve_quadratic_madhyamaharana(e);
  const Rational x = solve_linear(norm.left.ya, norm.left.ru, Rational(0), Rational(0));
  Roots roots;
  roots.values.push_back(ExactScalar(x));
  roots.admissible.push_back(true);
  SolveTrace trace;
  trace.input = e;
  trace.entries.push_back({SolveStepLabel::isolate, norm, "x = " + x.str()});
  return {std::move(roots), std::move(trace)};
}

InterestSolution interest_ab_2_25(const Rational& P, const Rational& T, const Rational& A) {
  if (P.sign() <= 0 || T.sign() <= 0) throw math_error("principal and time must be positive");
  if (A.sign() < 0) throw math_error("total interest cannot be negative");

  // Closed form: x = (sqrt(ATP + (P/2)²) - P/2) / T.
  const Rational radicand = A * T * P + (P / Rational(2)).square();
  const auto root = radicand.exact_sqrt();
  if (!root) throw inexact_error("interest problem has an irrational solution");
  const Rational by_formula = (*root - P / Rational(2)) / T;

  // The same problem as an equation: (T/P)·x² + x = A.
  const Equation eq{Paksha{T / P, Rational(1), -A}, Paksha{}};
  const auto [roots, trace] = solve_quadratic_madhyamaharana(eq);
  Rational by_steps;
  bool found = false;
  for (const auto& v : roots.values) {
    if (v.is_rational() && v.rational_value().sign() >= 0) {
      by_steps = v.rational_value();
      found = true;
    }
  }
  if (!found) throw math_error("no admissible interest root");
  if (by_formula != by_steps) throw math_error("closed form and step method disagree");
  return InterestSolution{by_formula, by_formula, by_steps};
}

std::pair<ExactScalar, ExactScalar> factors_from_diff_product(const Rational& a,
                                                             const Rational& b) {
  const Rational disc = a.square() + Rational(4) * b;
  if (disc.sign() < 0) throw math_error("no real factor pair");
  // x² - a·x = b, larger root.
  const Equation eq{Paksha{Rational(1), -a, -b}, Paksha{}};
  const auto [roots, trace] = solve_quadratic_madhyamaharana(eq);
  const ExactScalar x = roots.values.back();
  const ExactScalar y = x - ExactScalar(a);
  if (!(x * y == ExactScalar(b)) || !(x - y == ExactScalar(a)))
    throw math_error("factor verification failed");
  return {x, y};
}

Rational product_via_squares(const Rational& X, const Rational& Y) {
  const Rational p = ((X + Y).square() - (X.square() + Y.square())) / Rational(2);
  assert(p == X * Y);
  return p;
}

}  // namespace bija
