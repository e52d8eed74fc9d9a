#include "sulva/refinement.hpp"

#include "ganita/errors.hpp"

namespace sulva {

using ganita::math_error;

namespace {

int residual_sign_of(const Rational& cumulative) {
  return (cumulative.square() - Rational(2)).sign();
}

// True if the value has reached or passed sqrt(2) from below.
bool at_or_above_root2(const Rational& v) {
  return v.sign() > 0 && v.square() >= Rational(2);
}

// Of one value below sqrt(2) and one above, is the upper one closer?
// |above - r2| < |below - r2|  <=>  below + above < 2*sqrt(2), squared exactly.
// Equality cannot occur: the sum is rational, 2*sqrt(2) is not.
bool above_is_closer(const Rational& below, const Rational& above) {
  return (below + above).square() < Rational(8);
}

}  // namespace

RefinementTrace sulba_diagonal_refinement(int max_steps) {
  if (max_steps < 1) throw math_error("max_steps must be at least 1");

  RefinementTrace trace;
  Rational cumulative(1);
  Rational piece(1);  // the previous correction term; the whole cord at first

  for (int step = 0; step < max_steps; ++step) {
    const int side = residual_sign_of(cumulative);
    if (side == 0) break;  // landed exactly on the diagonal (cannot happen)
    const int dir = side < 0 ? +1 : -1;

    const auto value_at = [&](std::int64_t n) {
      return cumulative + Rational(dir) * (piece / Rational(n));
    };
    // Moving away from the current side: with dir=+1 from below, value_at(n)
    // decreases toward `cumulative` as n grows; crossings happen at small n.
    const auto crosses = [&](std::int64_t n) {
      const Rational v = value_at(n);
      return dir > 0 ? at_or_above_root2(v) : !at_or_above_root2(v);
    };

    std::int64_t n;
    if (!crosses(2)) {
      // Even the coarsest subdivision stays on this side; the biggest
      // admissible piece is the closest.
      n = 2;
    } else {
      // Largest n still crossing, by doubling then bisection.
      std::int64_t lo = 2, hi = 4;
      while (crosses(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > (std::int64_t{1} << 50)) throw math_error("refinement multiplier overflow");
      }
      while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (crosses(mid) ? lo : hi) = mid;
      }
      // lo crosses to the far side, lo+1 stays near; take whichever ends
      // closer to the diagonal.
      const Rational far_v = value_at(lo);
      const Rational near_v = value_at(lo + 1);
      const Rational& below = dir > 0 ? near_v : far_v;
      const Rational& above = dir > 0 ? far_v : near_v;
      const bool take_far = (dir > 0) == above_is_closer(below, above);
      n = take_far ? lo : lo + 1;
    }

    piece = piece / Rational(n);
    cumulative = cumulative + Rational(dir) * piece;

    RefinementStep s;
    s.sign = dir;
    s.term = piece;
    s.multiplier = n;
    s.cumulative = cumulative;
    s.residual_sign = residual_sign_of(cumulative);
    trace.steps.push_back(s);
  }
  return trace;
}

std::vector<Length> scale_trace_to_unit(const RefinementTrace& trace, const Length& unit) {
  std::vector<Length> out;
  out.reserve(trace.steps.size());
  for (const auto& s : trace.steps)
    out.push_back(Length{unit.magnitude * ganita::ExactScalar(s.term), unit.unit});
  return out;
}

}  // namespace sulva
