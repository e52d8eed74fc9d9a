#include "sulva/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace sulva {

using ganita::BigInt;
using ganita::math_error;
using ganita::parse_error;
using ganita::Rational;
using nlohmann::json;

namespace {

json rational_to_json(const Rational& r) {
  const auto encode = [](const BigInt& n) -> json {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(n);
    return n.str();
  };
  return json{{"num", encode(r.num())}, {"den", encode(r.den())}};
}

BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

Rational rational_from_json(const json& j) {
  return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

json scalar_to_json(const ExactScalar& s) {
  if (s.is_rational()) return rational_to_json(s.rational_value());
  return json{{"coeff", rational_to_json(s.coefficient())},
              {"radicand", rational_to_json(s.radicand())}};
}

ExactScalar scalar_from_json(const json& j) {
  if (j.contains("coeff"))
    return ExactScalar::surd(rational_from_json(j.at("coeff")),
                             rational_from_json(j.at("radicand")));
  return ExactScalar(rational_from_json(j));
}

}  // namespace

const Peg* Scene::find_peg(const std::string& name) const {
  for (const auto& p : pegs)
    if (p.name == name) return &p;
  return nullptr;
}

void Scene::validate() const {
  const auto require = [&](const std::string& name, const char* what) {
    if (!find_peg(name)) throw math_error(std::string(what) + " references unknown peg: " + name);
  };
  for (const auto& c : cords) {
    require(c.from, "cord");
    require(c.to, "cord");
  }
  for (const auto& c : circles) require(c.center, "circle");
  for (const auto& l : lines) {
    require(l.from, "line");
    require(l.to, "line");
  }
  for (const auto& f : figures) {
    if (f.vertices.size() < 3) throw math_error("figure '" + f.name + "' needs >= 3 vertices");
    for (const auto& v : f.vertices) require(v, "figure");
  }
}

std::string Scene::to_json() const {
  json j;
  j["pegs"] = json::array();
  for (const auto& p : pegs) {
    json pj{{"name", p.name}};
    if (p.exact) {
      pj["x"] = scalar_to_json(p.point.x);
      pj["y"] = scalar_to_json(p.point.y);
    } else {
      pj["x"] = p.approx.x;
      pj["y"] = p.approx.y;
      pj["tol"] = p.approx.tol;
    }
    j["pegs"].push_back(pj);
  }
  j["cords"] = json::array();
  for (const auto& c : cords) {
    json cj{{"from", c.from}, {"to", c.to}, {"length", scalar_to_json(c.length)}};
    cj["marks"] = json::array();
    for (const auto& m : c.marks) cj["marks"].push_back(rational_to_json(m));
    j["cords"].push_back(cj);
  }
  j["circles"] = json::array();
  for (const auto& c : circles)
    j["circles"].push_back(json{{"center", c.center}, {"radius", scalar_to_json(c.radius)}});
  j["lines"] = json::array();
  for (const auto& l : lines) j["lines"].push_back(json{{"from", l.from}, {"to", l.to}});
  j["figures"] = json::array();
  for (const auto& f : figures)
    j["figures"].push_back(json{{"name", f.name}, {"vertices", f.vertices}});
  j["approximate"] = approximate;
  return j.dump(2);
}

Scene Scene::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad scene JSON: ") + e.what());
  }
  Scene s;
  try {
    for (const auto& pj : j.at("pegs")) {
      Peg p;
      p.name = pj.at("name").get<std::string>();
      if (pj.at("x").is_object()) {
        p.exact = true;
        p.point = Point{scalar_from_json(pj.at("x")), scalar_from_json(pj.at("y"))};
      } else {
        p.exact = false;
        p.approx = ApproxPoint{pj.at("x").get<double>(), pj.at("y").get<double>(),
                               pj.value("tol", 1e-9)};
      }
      s.pegs.push_back(std::move(p));
    }
    for (const auto& cj : j.at("cords")) {
      SceneCord c;
      c.from = cj.at("from").get<std::string>();
      c.to = cj.at("to").get<std::string>();
      c.length = scalar_from_json(cj.at("length"));
      for (const auto& mj : cj.at("marks")) c.marks.push_back(rational_from_json(mj));
      s.cords.push_back(std::move(c));
    }
    for (const auto& cj : j.at("circles"))
      s.circles.push_back(
          SceneCircle{cj.at("center").get<std::string>(), scalar_from_json(cj.at("radius"))});
    for (const auto& lj : j.at("lines"))
      s.lines.push_back(SceneLine{lj.at("from").get<std::string>(), lj.at("to").get<std::string>()});
    for (const auto& fj : j.at("figures"))
      s.figures.push_back(SceneFigure{fj.at("name").get<std::string>(),
                                      fj.at("vertices").get<std::vector<std::string>>()});
    s.approximate = j.at("approximate").get<bool>();
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad scene JSON: ") + e.what());
  }
  s.validate();
  return s;
}

namespace {

struct XY {
  double x, y;
};

XY peg_xy(const Peg& p) {
  if (p.exact) return {p.point.x.to_double(), p.point.y.to_double()};
  return {p.approx.x, p.approx.y};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string scene_to_svg(const Scene& scene) {
  scene.validate();
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  const auto grow = [&](double x, double y, double r) {
    if (first) {
      xmin = x - r;
      xmax = x + r;
      ymin = y - r;
      ymax = y + r;
      first = false;
    } else {
      xmin = std::min(xmin, x - r);
      xmax = std::max(xmax, x + r);
      ymin = std::min(ymin, y - r);
      ymax = std::max(ymax, y + r);
    }
  };
  for (const auto& p : scene.pegs) {
    const XY c = peg_xy(p);
    grow(c.x, c.y, 0);
  }
  for (const auto& c : scene.circles) {
    const XY ctr = peg_xy(*scene.find_peg(c.center));
    grow(ctr.x, ctr.y, c.radius.to_double());
  }
  const double margin = 0.05 * std::max({xmax - xmin, ymax - ymin, 1.0});
  xmin -= margin;
  xmax += margin;
  ymin -= margin;
  ymax += margin;

  // SVG y runs downward; flip about the viewBox.
  const auto Y = [&](double y) { return ymin + ymax - y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin) << " " << fmt(ymin)
      << " " << fmt(xmax - xmin) << " " << fmt(ymax - ymin) << "\">\n";
  const double stroke = (xmax - xmin) / 200.0;

  for (const auto& c : scene.circles) {
    const XY ctr = peg_xy(*scene.find_peg(c.center));
    svg << "  <circle cx=\"" << fmt(ctr.x) << "\" cy=\"" << fmt(Y(ctr.y)) << "\" r=\""
        << fmt(c.radius.to_double()) << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << fmt(stroke) << "\"/>\n";
  }
  const auto draw_line = [&](const std::string& from, const std::string& to, const char* color) {
    const XY a = peg_xy(*scene.find_peg(from));
    const XY b = peg_xy(*scene.find_peg(to));
    svg << "  <line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(Y(a.y)) << "\" x2=\"" << fmt(b.x)
        << "\" y2=\"" << fmt(Y(b.y)) << "\" stroke=\"" << color << "\" stroke-width=\""
        << fmt(stroke) << "\"/>\n";
  };
  for (const auto& l : scene.lines) draw_line(l.from, l.to, "black");
  for (const auto& c : scene.cords) draw_line(c.from, c.to, "peru");
  for (const auto& f : scene.figures) {
    svg << "  <polygon points=\"";
    for (const auto& v : f.vertices) {
      const XY p = peg_xy(*scene.find_peg(v));
      svg << fmt(p.x) << "," << fmt(Y(p.y)) << " ";
    }
    svg << "\" fill=\"none\" stroke=\"darkred\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  }
  for (const auto& p : scene.pegs) {
    const XY c = peg_xy(p);
    svg << "  <circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(Y(c.y)) << "\" r=\""
        << fmt(2 * stroke) << "\" fill=\"black\"/>\n";
    svg << "  <text x=\"" << fmt(c.x + 3 * stroke) << "\" y=\"" << fmt(Y(c.y) - 3 * stroke)
        << "\" font-size=\"" << fmt(10 * stroke) << "\">" << p.name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sulva
