#pragma once

#include <string>
#include <vector>

#include "sulva/point.hpp"

namespace sulva {

/// A named peg: exact coordinates normally, decimal ones in a scene that
/// has degraded to approximate mode.
struct Peg {
  std::string name;
  bool exact = true;
  Point point;         // when exact
  ApproxPoint approx;  // when !exact
};

struct SceneCord {
  std::string from, to;
  ExactScalar length;
  std::vector<Rational> marks;  // fractional positions along the cord
};

struct SceneCircle {
  std::string center;
  ExactScalar radius;
};

struct SceneLine {
  std::string from, to;  // oriented from -> to
};

struct SceneFigure {
  std::string name;
  std::vector<std::string> vertices;  // peg names, closed polygon, >= 3
};

/// The apparatus of a rope-and-peg construction. Immutable by convention:
/// construction helpers return new scenes.
struct Scene {
  std::vector<Peg> pegs;
  std::vector<SceneCord> cords;
  std::vector<SceneCircle> circles;
  std::vector<SceneLine> lines;
  std::vector<SceneFigure> figures;
  bool approximate = false;

  const Peg* find_peg(const std::string& name) const;

  /// Every referenced name must exist; figures must close with >= 3 pegs.
  void validate() const;

  std::string to_json() const;
  static Scene from_json(const std::string& text);
};

/// Scene rendering for the CLI; schematic, exact values at 12 significant
/// digits.
std::string scene_to_svg(const Scene& scene);

}  // namespace sulva
