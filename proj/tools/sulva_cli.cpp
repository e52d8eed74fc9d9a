// Command-line front end: constructions to JSON/SVG, equation solving from
// two-row notation files, calendar simulation, brick partitions,
// proportions, the diagonal refinement, and the square identities.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bija/solve.hpp"
#include "brick/calendar.hpp"
#include "brick/partition.hpp"
#include "ganita/units.hpp"
#include "notation/notation.hpp"
#include "proportion/proportion.hpp"
#include "sulva/constructions.hpp"
#include "sulva/counting.hpp"
#include "sulva/refinement.hpp"
#include "sulva/scene.hpp"

namespace {

using ganita::ExactScalar;
using ganita::Rational;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

std::string exact_and_decimal(const Rational& r) {
  std::ostringstream os;
  os << r.str() << " ≈ " << std::setprecision(7) << r.to_double();
  return os.str();
}

sulva::Point pt(long long x, long long y) {
  return sulva::Point{ExactScalar(Rational(x)), ExactScalar(Rational(y))};
}

sulva::Scene recipe_scene(const std::string& name) {
  using namespace sulva;
  Scene s;
  if (name == "prachi") {
    s.pegs = {{"gnomon", true, pt(0, 0), {}},
              {"W", true, pt(-4, 3), {}},
              {"E", true, pt(4, 3), {}}};
    s.circles = {{"gnomon", ExactScalar(Rational(5))}};
    const auto line = prachi_from_shadow_points(s.pegs[1].point, s.pegs[2].point,
                                                ShadowCircle{s.pegs[0].point, s.circles[0].radius});
    (void)line;
    s.lines = {{"W", "E"}};
  } else if (name == "perpendicular") {
    const Point a = pt(-3, 0), b = pt(3, 0), c = pt(0, 0);
    const auto res = perpendicular_via_cord(a, b, c, ExactScalar(Rational(10)));
    s.pegs = {{"A", true, a, {}}, {"B", true, b, {}}, {"C", true, c, {}}};
    if (res.exact) {
      s.pegs.push_back({"P", true, res.p, {}});
      s.pegs.push_back({"Q", true, res.q, {}});
    } else {
      s.pegs.push_back({"P", false, {}, res.pa});
      s.pegs.push_back({"Q", false, {}, res.qa});
      s.approximate = true;
    }
    s.cords = {{"A", "B", ExactScalar(Rational(10)), {Rational(1, 2)}}};
    s.lines = {{"P", "Q"}};
  } else if (name == "square") {
    s.pegs = {{"A", true, pt(0, 0), {}},
              {"B", true, pt(1, 0), {}},
              {"C", true, pt(1, 1), {}},
              {"D", true, pt(0, 1), {}}};
    const auto cls = classify_quadrilateral(
        {s.pegs[0].point, s.pegs[1].point, s.pegs[2].point, s.pegs[3].point});
    s.figures = {{figure_class_name(cls), {"A", "B", "C", "D"}}};
  } else if (name == "rectangle") {
    s.pegs = {{"A", true, pt(0, 0), {}},
              {"B", true, pt(3, 0), {}},
              {"C", true, pt(3, 1), {}},
              {"D", true, pt(0, 1), {}}};
    const auto cls = classify_quadrilateral(
        {s.pegs[0].point, s.pegs[1].point, s.pegs[2].point, s.pegs[3].point});
    s.figures = {{figure_class_name(cls), {"A", "B", "C", "D"}}};
  } else if (name == "diagonal-square") {
    // The dvikaraṇī square raised on the diagonal of the unit square.
    s.pegs = {{"A", true, pt(0, 0), {}},
              {"B", true, pt(1, 0), {}},
              {"C", true, pt(1, 1), {}},
              {"D", true, pt(0, 1), {}},
              {"E", true, pt(0, 2), {}},
              {"F", true, pt(-1, 1), {}}};
    s.lines = {{"A", "C"}};
    s.figures = {{"samacaturasra", {"A", "B", "C", "D"}},
                 {"dvikarani", {"A", "C", "E", "F"}}};
  } else {
    throw CLI::ValidationError("--recipe", "unknown recipe: " + name);
  }
  s.validate();
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ganita::math_error("cannot write file: " + path);
  out << content;
}

ganita::Length parse_unit_spec(const std::string& spec) {
  std::istringstream in(spec);
  std::string number, unit;
  in >> number >> unit;
  if (number.empty()) throw ganita::parse_error("bad unit spec: " + spec);
  const auto u = unit.empty() ? std::optional<ganita::Unit>(ganita::Unit::abstract_unit)
                              : ganita::unit_from_name(unit);
  if (!u) throw ganita::parse_error("unknown unit: " + unit);
  return ganita::Length{ExactScalar(Rational::parse(number)), *u};
}

int run(int argc, char** argv) {
  CLI::App app{"Reconstructions of rope-and-peg geometry, brick arithmetic, "
               "proportions and early algebra"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "run a rope-and-peg recipe");
  std::string recipe;
  std::string out_json, out_svg;
  construct->add_option("--recipe", recipe, "prachi|perpendicular|square|rectangle|diagonal-square")
      ->required();
  construct->add_option("--out", out_json, "write the scene document here");
  construct->add_option("--svg", out_svg, "write an SVG rendering here");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an equation from a notation file");
  std::string eq_file;
  bool with_trace = false;
  solve_cmd->add_option("--file", eq_file, "two-row notation file")->required();
  solve_cmd->add_flag("--trace", with_trace, "print the madhyamāharaṇa steps");

  // calendar
  auto* calendar_cmd = app.add_subcommand("calendar", "simulate the day-count calendar");
  std::int64_t n_days = 0;
  std::string config_file;
  calendar_cmd->add_option("--days", n_days, "number of days to simulate")->required();
  calendar_cmd->add_option("--config", config_file, "key=value observation constants");

  // partition
  auto* partition_cmd = app.add_subcommand("partition", "equal splits of a brick heap");
  std::int64_t total = 0;
  bool sb_filter = false;
  partition_cmd->add_option("--total", total, "number of bricks")->required();
  partition_cmd->add_flag("--sb-filter", sb_filter, "keep only bodies of 30 or more bricks");

  // proportion
  auto* proportion_cmd = app.add_subcommand("proportion", "rule of three and compound rules");
  std::vector<std::string> prop_args;
  proportion_cmd->add_option("problem", prop_args,
                             "\"a:b::x:?\" or stage pairs \"a:b\" ... followed by the iccha")
      ->required();

  // approx-diagonal
  auto* diag_cmd = app.add_subcommand("approx-diagonal", "refine the unit square's diagonal");
  int steps = 3;
  std::string unit_spec;
  diag_cmd->add_option("--steps", steps, "number of corrections");
  diag_cmd->add_option("--unit", unit_spec, "physical unit length, e.g. \"35 ft\"");

  // identity
  auto* identity_cmd = app.add_subcommand("identity", "decompose the (X+Y) square");
  std::string x_str, y_str;
  identity_cmd->add_option("--x", x_str)->required();
  identity_cmd->add_option("--y", y_str)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (construct->parsed()) {
    const sulva::Scene scene = recipe_scene(recipe);
    const std::string doc = scene.to_json();
    if (!out_json.empty()) write_file(out_json, doc);
    if (!out_svg.empty()) write_file(out_svg, sulva::scene_to_svg(scene));
    if (out_json.empty() && out_svg.empty()) std::cout << doc << "\n";
    return 0;
  }

  if (solve_cmd->parsed()) {
    const auto doc = notation::read_document_from_file(eq_file);
    const bija::Equation eq = notation::parse(doc);
    std::cout << "equation: " << eq.str() << "\n";
    const bija::Equation norm = bija::normalize(eq);
    std::cout << "normalized: " << norm.str() << "\n";
    const auto [roots, trace] = bija::solve(eq);
    if (with_trace) {
      for (const auto& entry : trace.entries) {
        std::cout << "  [" << bija::solve_step_label_name(entry.label) << "] " << entry.eq.str();
        if (!entry.note.empty()) std::cout << "   " << entry.note;
        std::cout << "\n";
      }
    }
    for (size_t i = 0; i < roots.values.size(); ++i) {
      const auto& v = roots.values[i];
      std::cout << "root: " << v.str() << " ≈ " << std::setprecision(7) << v.to_double()
                << (roots.admissible[i] ? "" : " (inadmissible)") << "\n";
    }
    return 0;
  }

  if (calendar_cmd->parsed()) {
    brick::CalendarConfig config;
    if (!config_file.empty()) config = brick::CalendarConfig::from_file(config_file);
    std::cout << brick::simulate(config, n_days).to_json() << "\n";
    return 0;
  }

  if (partition_cmd->parsed()) {
    for (const auto& p : brick::equal_partitions_of(total, sb_filter))
      std::cout << "(" << p.bodies << ", " << p.size << ")\n";
    return 0;
  }

  if (proportion_cmd->parsed()) {
    if (prop_args.size() == 1 && prop_args[0].find("::") != std::string::npos) {
      const auto p = proportion::parse_rule_of_three(prop_args[0]);
      std::cout << "icchaphala: " << exact_and_decimal(proportion::rule_of_three(p)) << "\n";
      return 0;
    }
    if (prop_args.size() < 2)
      throw ganita::parse_error("expected \"a:b::x:?\" or stage pairs plus the iccha");
    proportion::CompoundProportion c;
    for (size_t i = 0; i + 1 < prop_args.size(); ++i) {
      const auto colon = prop_args[i].find(':');
      if (colon == std::string::npos)
        throw ganita::parse_error("stage must be \"a:b\": " + prop_args[i]);
      c.stages.emplace_back(Rational::parse(prop_args[i].substr(0, colon)),
                            Rational::parse(prop_args[i].substr(colon + 1)));
    }
    c.iccha = Rational::parse(prop_args.back());
    std::cout << "icchaphala: " << exact_and_decimal(proportion::compound_proportion(c)) << "\n";
    return 0;
  }

  if (diag_cmd->parsed()) {
    const auto trace = sulva::sulba_diagonal_refinement(steps);
    std::cout << "start: 1\n";
    for (const auto& s : trace.steps) {
      std::cout << "step: " << (s.sign > 0 ? "+" : "-") << s.term.str() << " (multiplier "
                << s.multiplier << ") -> " << exact_and_decimal(s.cumulative)
                << (s.residual_sign < 0 ? "  [short of the diagonal]" : "  [past the diagonal]")
                << "\n";
    }
    std::cout << "value: " << exact_and_decimal(trace.value()) << "\n";
    if (!unit_spec.empty()) {
      const ganita::Length unit = parse_unit_spec(unit_spec);
      const auto scaled = sulva::scale_trace_to_unit(trace, unit);
      for (const auto& len : scaled) {
        std::cout << "correction: " << len.magnitude.str() << " " << ganita::unit_name(len.unit)
                  << " ≈ " << std::setprecision(4) << len.magnitude.to_double() << " "
                  << ganita::unit_name(len.unit);
        if (ganita::tila_factor(len.unit)) {
          const auto inches = ganita::convert(len, ganita::Unit::inch);
          std::cout << " = " << std::setprecision(4) << inches.magnitude.to_double() << " in";
        }
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (identity_cmd->parsed()) {
    const Rational x = Rational::parse(x_str);
    const Rational y = Rational::parse(y_str);
    const auto parts = sulva::decompose_square(x, y);
    Rational sum(0);
    for (const auto& part : parts) {
      std::cout << part.label << ": " << part.area.str() << "\n";
      sum += part.area;
    }
    std::cout << "sum: " << sum.str() << " = (" << (x + y).str() << ")^2\n";
    std::cout << "product via squares: " << bija::product_via_squares(x, y).str() << "\n";
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ganita::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ganita::math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
