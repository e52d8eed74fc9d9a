#pragma once

#include <optional>
#include <string>

#include "ganita/exact_scalar.hpp"

namespace ganita {

/// Historical length units. hasta and aratni are registered names with no
/// attested conversion factor; converting them errors. "abstract" is a bare
/// number and converts to nothing.
enum class Unit { tila, angula, purusha, inch, foot, abstract_unit, hasta, aratni };

inline std::string unit_name(Unit u) {
  switch (u) {
    case Unit::tila: return "tila";
    case Unit::angula: return "angula";
    case Unit::purusha: return "purusha";
    case Unit::inch: return "in";
    case Unit::foot: return "ft";
    case Unit::abstract_unit: return "unit";
    case Unit::hasta: return "hasta";
    case Unit::aratni: return "aratni";
  }
  return "?";
}

inline std::optional<Unit> unit_from_name(const std::string& s) {
  if (s == "tila") return Unit::tila;
  if (s == "angula" || s == "aṅgula") return Unit::angula;
  if (s == "purusha" || s == "puruṣa") return Unit::purusha;
  if (s == "in" || s == "inch") return Unit::inch;
  if (s == "ft" || s == "foot" || s == "feet") return Unit::foot;
  if (s == "unit" || s == "abstract") return Unit::abstract_unit;
  if (s == "hasta") return Unit::hasta;
  if (s == "aratni") return Unit::aratni;
  return std::nullopt;
}

struct Length {
  ExactScalar magnitude;
  Unit unit = Unit::abstract_unit;

  std::string str() const { return magnitude.str() + " " + unit_name(unit); }
};

/// Factor from one unit into tila, the finest grain of the table:
/// 1 angula = 34 tila, 1 angula = 3/4 in, 1 ft = 12 in, 1 purusha = 108 angula.
inline std::optional<Rational> tila_factor(Unit u) {
  switch (u) {
    case Unit::tila: return Rational(1);
    case Unit::angula: return Rational(34);
    case Unit::inch: return Rational(136, 3);   // 34 · 4/3
    case Unit::foot: return Rational(544);      // 12 · 136/3
    case Unit::purusha: return Rational(3672);  // 108 · 34
    default: return std::nullopt;
  }
}

inline Length convert(const Length& x, Unit target) {
  if (x.unit == target) return x;
  const auto from = tila_factor(x.unit);
  const auto to = tila_factor(target);
  if (!from || !to)
    throw math_error("incommensurable unit: " + unit_name(!from ? x.unit : target));
  return Length{x.magnitude * ExactScalar(*from / *to), target};
}

/// Constants of the ritual time hierarchy.
struct TimeUnits {
  static constexpr int muhurtas_per_day = 30;
  static constexpr int muhurtas_per_half_day = 15;
  static constexpr int prati_muhurtas_per_muhurta = 15;
  static constexpr int days_per_ritual_year = 360;
};

}  // namespace ganita
