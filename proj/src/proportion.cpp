#include "proportion/proportion.hpp"

namespace proportion {

using ganita::parse_error;

RuleOfThreeProblem parse_rule_of_three(const std::string& text) {
  const auto sep = text.find("::");
  if (sep == std::string::npos) throw parse_error("expected 'a:b::x:?': " + text);
  const std::string head = text.substr(0, sep);
  const std::string tail = text.substr(sep + 2);
  const auto c1 = head.find(':');
  const auto c2 = tail.find(':');
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw parse_error("expected 'a:b::x:?': " + text);
  const std::string unknown = tail.substr(c2 + 1);
  if (unknown != "?") throw parse_error("fourth member must be '?': " + text);
  RuleOfThreeProblem p;
  p.pramana = Rational::parse(head.substr(0, c1));
  p.phala = Rational::parse(head.substr(c1 + 1));
  p.iccha = Rational::parse(tail.substr(0, c2));
  return p;
}

}  // namespace proportion
