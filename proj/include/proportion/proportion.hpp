#pragma once

#include <string>
#include <vector>

#include "ganita/rational.hpp"

namespace proportion {

using ganita::Rational;

/// "If for quantity a the result is b, what is it for quantity x?"
struct RuleOfThreeProblem {
  Rational pramana;  // a
  Rational phala;    // b
  Rational iccha;    // x
};

/// icchāphala y = b·x/a.
inline Rational rule_of_three(const RuleOfThreeProblem& p) {
  if (p.pramana.is_zero()) throw ganita::math_error("undefined proportion");
  return p.phala * p.iccha / p.pramana;
}

/// The rules of 5, 7, 9, 11: n chained pramana/phala stages.
struct CompoundProportion {
  std::vector<std::pair<Rational, Rational>> stages;  // (pramana, phala)
  Rational iccha;
};

inline Rational compound_proportion(const CompoundProportion& c) {
  Rational result = c.iccha;
  for (const auto& [pramana, phala] : c.stages) {
    if (pramana.is_zero()) throw ganita::math_error("undefined proportion");
    result = result * phala / pramana;
  }
  return result;
}

enum class TriangleMember { perpendicular, base };

/// AB 2.15-16: equate perpendicular/base across two similar right
/// triangles and solve for the missing member of the second.
inline Rational gnomon_shadow(const Rational& known_perpendicular, const Rational& known_base,
                              TriangleMember given, const Rational& value) {
  if (known_perpendicular.is_zero() || known_base.is_zero())
    throw ganita::math_error("degenerate triangle");
  if (given == TriangleMember::base) return known_perpendicular * value / known_base;
  return known_base * value / known_perpendicular;
}

/// Parse "a:b::x:?" (rule of three). Numbers may be "p", "p/q" or decimal.
RuleOfThreeProblem parse_rule_of_three(const std::string& text);

}  // namespace proportion
