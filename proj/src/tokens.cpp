#include "brick/tokens.hpp"

namespace brick {

TokenRegistry TokenRegistry::satapatha_defaults() {
  TokenRegistry reg;
  reg.register_token("yajusamati-brick", "day-count", "one day-or-night of 360");
  reg.register_token("yajusamati-brick", "fortnight", "one fortnight");
  reg.register_token("yajusamati-brick", "month", "one month");
  reg.register_token("yajusamati-brick", "season", "one season");
  reg.register_token("yajusamati-brick", "nakshatra", "one naksatra time-marker");
  reg.register_token("yajusamati-brick", "muhurta", "15 muhurtas of one day-or-night");
  reg.register_token("enclosing-stone", "day-count", "one day-or-night of 360");
  reg.register_token("enclosing-stone", "muhurta", "15 muhurtas of one day-or-night");
  reg.register_token("lokamprina-brick", "muhurta", "one muhurta of the year's 10800");
  return reg;
}

}  // namespace brick
