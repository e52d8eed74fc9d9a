#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ganita/rational.hpp"

namespace brick {

using ganita::Rational;

enum class Paksha { shukla, krishna };

/// Observation-model parameters. The defaults are explicit configuration,
/// not historical claims.
struct CalendarConfig {
  Rational synodic_month_days = Rational::parse("29.530589");
  Rational tropical_year_days = Rational::parse("365.2422");

  /// key=value lines: synodic_month_days, tropical_year_days.
  static CalendarConfig from_file(const std::string& path);
  static CalendarConfig from_text(const std::string& text);
};

/// One day of the satra count. Immutable; step_day returns the successor.
struct CalendarState {
  std::int64_t day_index = 1;      // 1-based within the (12-month) year
  int sadaha_day = 1;              // 1..6
  int tithi = 1;                   // 1..15
  Paksha paksha = Paksha::shukla;
  int month_index = 1;             // 1..12
  int day_in_month = 1;            // 1..30
  std::int64_t elapsed_days = 1;
  std::int64_t months_elapsed = 0; // completed months
  CalendarConfig config;

  static CalendarState initial(CalendarConfig config = {});
};

/// Advance one day. When the lunar observation model reports the phase
/// completing a day early (month closing on its 29th day), the 30th tithi
/// is dropped: the final day of the current ṣaḍaha is skipped and the
/// fortnight closes at 14 days.
CalendarState step_day(const CalendarState& s);

struct SimulationReport {
  std::vector<int> months;        // completed month lengths
  double mean_month = 0;
  std::vector<int> year_lengths;  // days between successive like ayana events
  std::int64_t drops = 0;

  std::string to_json() const;
};

SimulationReport simulate(const CalendarConfig& config, std::int64_t n_days);

/// Ordinal tithi names as attested: 1..4 and the 15th; the rest numeric.
std::string tithi_name(int tithi, Paksha paksha);

/// Label of year k in the five-year yuga cycle ("year_1".."year_5").
std::string yuga_year_label(std::int64_t year_number);

}  // namespace brick
