#pragma once

#include <utility>
#include <vector>

#include "bija/equation.hpp"

namespace bija {

struct Roots {
  std::vector<ExactScalar> values;     // one or two, ascending
  std::vector<bool> admissible;        // per-problem filter; never deletes a root
};

enum class SolveStepLabel {
  clear_denominators,
  multiply_by_4a,
  add_b_squared,
  complete_square,
  extract_root,
  isolate,
};

std::string solve_step_label_name(SolveStepLabel label);

struct TraceEntry {
  SolveStepLabel label;
  Equation eq;       // snapshot after the step (polynomial stages)
  std::string note;  // rendering of non-polynomial stages (roots etc.)
};

struct SolveTrace {
  Equation input;
  std::vector<TraceEntry> entries;
};

/// AB 2.30: a1 beads and b1 coins equal a2 beads and b2 coins; one bead is
/// worth (b2-b1)/(a1-a2) coins.
Rational solve_linear(const Rational& a1, const Rational& b1, const Rational& a2,
                      const Rational& b2);

/// Elimination of the middle term (BG 5.131, Śrīdhara's steps), on a
/// normalized quadratic: multiply by 4a, add b², read off (2ax+b)²,
/// extract the root with both branches, isolate x. Irrational roots come
/// back as surds; roots needing a rational+surd sum are out of scope.
std::pair<Roots, SolveTrace> solve_quadratic_madhyamaharana(const Equation& e);

/// Dispatch on degree after normalization.
std::pair<Roots, SolveTrace> solve(const Equation& e);

struct InterestSolution {
  Rational x;           // the month's interest on P
  Rational by_formula;  // closed form: (sqrt(ATP + (P/2)²) - P/2)/T
  Rational by_steps;    // admissible root of the completed square
};

/// AB 2.25: interest x on principal P whose compounded total over T months
/// is A; solves (T/P)x² + x = A both ways and insists they agree exactly.
InterestSolution interest_ab_2_25(const Rational& P, const Rational& T, const Rational& A);

/// AB 2.24: factor pair with difference a and product b, via x² - ax = b.
std::pair<ExactScalar, ExactScalar> factors_from_diff_product(const Rational& a,
                                                             const Rational& b);

/// AB 2.23: X·Y = ((X+Y)² - (X² + Y²)) / 2.
Rational product_via_squares(const Rational& X, const Rational& Y);

}  // namespace bija
