#include "brick/calendar.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ganita/errors.hpp"

namespace brick {

using ganita::math_error;
using ganita::parse_error;

CalendarConfig CalendarConfig::from_text(const std::string& text) {
  CalendarConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("config line is not key=value: " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "synodic_month_days")
      cfg.synodic_month_days = Rational::parse(value);
    else if (key == "tropical_year_days")
      cfg.tropical_year_days = Rational::parse(value);
    else
      throw parse_error("unknown config key: " + key);
  }
  if (cfg.synodic_month_days.sign() <= 0 || cfg.tropical_year_days.sign() <= 0)
    throw math_error("calendar constants must be positive");
  return cfg;
}

CalendarConfig CalendarConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

CalendarState CalendarState::initial(CalendarConfig config) {
  CalendarState s;
  s.config = std::move(config);
  return s;
}

CalendarState step_day(const CalendarState& s) {
  CalendarState n = s;
  n.elapsed_days = s.elapsed_days + 1;

  // New-moon target of the running month; the phase returning by the 29th
  // day is the observed signal to drop the month's last tithi.
  const Rational target = s.config.synodic_month_days * Rational(s.months_elapsed + 1);
  const bool observed_early =
      s.day_in_month == 29 && Rational(s.elapsed_days) >= target;
  const bool month_closes = s.day_in_month >= 30 || observed_early;

  if (month_closes) {
    n.months_elapsed = s.months_elapsed + 1;
    n.day_in_month = 1;
    n.tithi = 1;
    n.paksha = Paksha::shukla;
    n.sadaha_day = 1;
    n.month_index = s.month_index % 12 + 1;
    n.day_index = n.month_index == 1 ? 1 : s.day_index + 1;
  } else {
    n.day_in_month = s.day_in_month + 1;
    n.tithi = (n.day_in_month - 1) % 15 + 1;
    n.paksha = n.day_in_month <= 15 ? Paksha::shukla : Paksha::krishna;
    n.sadaha_day = (n.day_in_month - 1) % 6 + 1;
    n.day_index = s.day_index + 1;
  }
  return n;
}

SimulationReport simulate(const CalendarConfig& config, std::int64_t n_days) {
  if (n_days < 1) throw math_error("n_days must be at least 1");
  SimulationReport report;

  CalendarState s = CalendarState::initial(config);
  std::int64_t last_ayana_day = -1;
  Rational next_ayana = config.tropical_year_days;

  for (std::int64_t i = 1; i < n_days; ++i) {
    const CalendarState next = step_day(s);
    if (next.months_elapsed > s.months_elapsed) {
      report.months.push_back(s.day_in_month);
      if (s.day_in_month == 29) ++report.drops;
    }
    if (Rational(next.elapsed_days) >= next_ayana) {
      if (last_ayana_day >= 0)
        report.year_lengths.push_back(static_cast<int>(next.elapsed_days - last_ayana_day));
      last_ayana_day = next.elapsed_days;
      next_ayana += config.tropical_year_days;
    }
    s = next;
  }

  if (!report.months.empty()) {
    double sum = 0;
    for (const int m : report.months) sum += m;
    report.mean_month = sum / static_cast<double>(report.months.size());
  }
  return report;
}

std::string SimulationReport::to_json() const {
  nlohmann::json j;
  j["months"] = months;
  j["mean_month"] = mean_month;
  j["year_lengths"] = year_lengths;
  j["drops"] = drops;
  return j.dump();
}

std::string tithi_name(int tithi, Paksha paksha) {
  if (tithi < 1 || tithi > 15) throw math_error("tithi out of range");
  switch (tithi) {
    case 1: return "prathama";
    case 2: return "dvitiya";
    case 3: return "tritiya";
    case 4: return "caturthi";
    case 15: return paksha == Paksha::shukla ? "purnamasi" : "amavasya";
    default: return std::to_string(tithi);
  }
}

std::string yuga_year_label(std::int64_t year_number) {
  if (year_number < 1) throw math_error("year number must be positive");
  return "year_" + std::to_string((year_number - 1) % 5 + 1);
}

}  // namespace brick
