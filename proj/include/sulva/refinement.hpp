#pragma once

#include <cstdint>
#include <vector>

#include "ganita/units.hpp"

namespace sulva {

using ganita::Length;
using ganita::Rational;

/// One correction of the diagonal cord: sign, the piece added or removed,
/// the subdivision multiplier that produced it, and the exact state after.
struct RefinementStep {
  int sign = +1;                  // +1 added, -1 removed
  Rational term;                  // positive magnitude of the piece
  std::int64_t multiplier = 0;    // n: term = previous_term / n
  Rational cumulative;            // length covered so far
  int residual_sign = 0;          // sign of cumulative² - 2
};

struct RefinementTrace {
  std::vector<RefinementStep> steps;  // after the initial whole cord of 1

  Rational value() const { return steps.empty() ? Rational(1) : steps.back().cumulative; }
};

/// BS 1.61/KS 2.13 style refinement of the unit square's diagonal.
///
/// Start with the unit cord (1). Each correction subdivides the previous
/// piece into n parts and applies one part toward √2 — added while the
/// covered length falls short, removed while it overshoots — with n the
/// smallest multiplier ≥ 2 bringing the cord closest to the diagonal,
/// decided entirely by exact square comparisons. Three steps reproduce
/// 1 + 1/3 + 1/(3·4) - 1/(3·4·34) = 577/408.
RefinementTrace sulba_diagonal_refinement(int max_steps);

/// Report each correction as a physical length in the given unit
/// (e.g. a 35 ft cord), exact throughout.
std::vector<Length> scale_trace_to_unit(const RefinementTrace& trace, const Length& unit);

}  // namespace sulva
