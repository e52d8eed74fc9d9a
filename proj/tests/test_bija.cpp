#include <doctest.h>

#include <random>
#include <sstream>

#include "bija/solve.hpp"
#include "notation/notation.hpp"
#include "proportion/proportion.hpp"

using bija::Equation;
using bija::Paksha;
using ganita::ExactScalar;
using ganita::Rational;

namespace {

Paksha pk(long long yava, long long ya, long long ru) {
  return Paksha{Rational(yava), Rational(ya), Rational(ru)};
}

std::mt19937 rng(23);

Rational rand_rational(long long lo, long long hi) {
  std::uniform_int_distribution<long long> num(lo, hi);
  std::uniform_int_distribution<long long> den(1, 40);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rule of three") {
  using namespace proportion;
  CHECK(rule_of_three({Rational(5), Rational(20), Rational(8)}) == Rational(32));
  CHECK(rule_of_three({Rational(1), Rational(7, 2), Rational(12)}) == Rational(42));
  CHECK(rule_of_three({Rational(7), Rational(7), Rational(7)}) == Rational(7));
  CHECK_THROWS_WITH_AS((void)rule_of_three({Rational(0), Rational(1), Rational(1)}),
                       "undefined proportion", ganita::math_error);
}

TEST_CASE("rule of three invariances") {
  using namespace proportion;
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(-50, 50);
    if (a.is_zero()) a = Rational(1);
    const Rational b = rand_rational(-50, 50);
    Rational k = rand_rational(-20, 20);
    if (k.is_zero()) k = Rational(3);
    const Rational x = rand_rational(-50, 50);
    CHECK(rule_of_three({a, b, x}) == rule_of_three({a * k, b * k, x}));  // scale invariance
    CHECK(rule_of_three({a, b, a}) == b);  // re-asking the known question
  }
}

TEST_CASE("compound proportion chains the stages") {
  using namespace proportion;
  CHECK(compound_proportion({{{Rational(5), Rational(20)}}, Rational(8)}) == Rational(32));
  // interest of 600 at 5 per 100 per 12 months, for 1 month
  CHECK(compound_proportion({{{Rational(100), Rational(5)}, {Rational(12), Rational(1)}},
                             Rational(600)}) == Rational(5, 2));
  CHECK(compound_proportion({{{Rational(2), Rational(4)}, {Rational(3), Rational(9)}},
                             Rational(1)}) == Rational(6));
  // all-identity stages leave the iccha unchanged
  CHECK(compound_proportion({{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                             Rational(7, 3)}) == Rational(7, 3));
}

TEST_CASE("gnomon and shadow") {
  using namespace proportion;
  CHECK(gnomon_shadow(Rational(12), Rational(16), TriangleMember::base, Rational(4)) ==
        Rational(3));
  CHECK(gnomon_shadow(Rational(1), Rational(1), TriangleMember::perpendicular, Rational(9)) ==
        Rational(9));
  CHECK_THROWS_WITH_AS(
      (void)gnomon_shadow(Rational(12), Rational(0), TriangleMember::base, Rational(4)),
      "degenerate triangle", ganita::math_error);
  // solve for base then re-solve for perpendicular returns the original
  const Rational base = gnomon_shadow(Rational(12), Rational(16), TriangleMember::perpendicular,
                                      Rational(5));
  CHECK(gnomon_shadow(Rational(12), Rational(16), TriangleMember::base, base) == Rational(5));
}

TEST_CASE("proportion problem strings") {
  const auto p = proportion::parse_rule_of_three("5:20::8:?");
  CHECK(proportion::rule_of_three(p) == Rational(32));
  CHECK_THROWS_AS((void)proportion::parse_rule_of_three("5:20:8"), ganita::parse_error);
  CHECK_THROWS_AS((void)proportion::parse_rule_of_three("5:20::8:9"), ganita::parse_error);
}

TEST_CASE("normalization moves everything left") {
  // 10x − 8 = x² + 1  →  x² − 10x + 9 = 0
  const Equation e{pk(0, 10, -8), pk(1, 0, 1)};
  const Equation n = bija::normalize(e);
  CHECK(n.left == pk(1, -10, 9));
  CHECK(n.right.is_zero());
  CHECK_THROWS_WITH_AS((void)bija::normalize({pk(0, 1, 0), pk(0, 1, 0)}),
                       "identity equation (indeterminate)", ganita::math_error);
  CHECK_THROWS_WITH_AS((void)bija::normalize({pk(0, 0, 1), pk(0, 0, 2)}),
                       "inconsistent equation", ganita::math_error);
}

TEST_CASE("normalize preserves root sets") {
  for (int i = 0; i < 100; ++i) {
    const Rational root = rand_rational(-30, 30);
    Rational a = rand_rational(1, 10);
    if (a.is_zero()) a = Rational(2);
    const Rational b = rand_rational(-10, 10);
    // a(x - root)(x - b-ish shift) construction: use (x-root)(ax - c)
    const Rational c = a * rand_rational(-30, 30);
    const Equation e{Paksha{a, -(a * root + c), c * root}, pk(0, 0, 0)};
    const Equation n = bija::normalize(e);
    CHECK(n.left.evaluate(ExactScalar(root)).is_zero());
    CHECK(e.left.evaluate(ExactScalar(root)).is_zero());
  }
}

TEST_CASE("linear rule of beads and coins") {
  CHECK(bija::solve_linear(Rational(5), Rational(2), Rational(3), Rational(8)) == Rational(3));
  CHECK(bija::solve_linear(Rational(1), Rational(0), Rational(0), Rational(7)) == Rational(7));
  CHECK_THROWS_AS(
      (void)bija::solve_linear(Rational(4), Rational(1), Rational(4), Rational(1)),
      ganita::math_error);
  CHECK_THROWS_AS(
      (void)bija::solve_linear(Rational(4), Rational(1), Rational(4), Rational(2)),
      ganita::math_error);
}

TEST_CASE("madhyamaharana walks Sridhara's steps") {
  const Equation e{pk(0, 10, -8), pk(1, 0, 1)};  // 10x − 8 = x² + 1
  const auto [roots, trace] = bija::solve_quadratic_madhyamaharana(e);
  REQUIRE(roots.values.size() == 2);
  CHECK(roots.values[0] == ExactScalar(Rational(1)));
  CHECK(roots.values[1] == ExactScalar(Rational(9)));

  // 4x² − 40x = −36, then +100 on both sides, then (2x−10)² = 64
  REQUIRE(trace.entries.size() >= 4);
  CHECK(trace.entries[0].label == bija::SolveStepLabel::multiply_by_4a);
  CHECK(trace.entries[0].eq.left == pk(4, -40, 0));
  CHECK(trace.entries[0].eq.right == pk(0, 0, -36));
  CHECK(trace.entries[1].label == bija::SolveStepLabel::add_b_squared);
  CHECK(trace.entries[1].eq.left == pk(4, -40, 100));
  CHECK(trace.entries[1].eq.right == pk(0, 0, 64));
  CHECK(trace.entries[2].label == bija::SolveStepLabel::complete_square);
  CHECK(trace.entries[2].note.find("(2*x + -10)^2 = 64") != std::string::npos);
  CHECK(trace.entries.back().label == bija::SolveStepLabel::isolate);
}

TEST_CASE("trace snapshots replay from the input") {
  const Equation cases[] = {
      {pk(0, 10, -8), pk(1, 0, 1)},
      {pk(1, 1, -2), pk(0, 0, 0)},
      {pk(2, -3, 0), pk(0, 0, 2)},
      {Paksha{Rational(1, 2), Rational(1, 3), Rational(-1, 6)}, pk(0, 0, 0)},
  };
  for (const Equation& e : cases) {
    const auto [roots, trace] = bija::solve_quadratic_madhyamaharana(e);
    const Equation n = bija::normalize(e);
    Equation cur{Paksha{n.left.yava, n.left.ya, Rational(0)},
                 Paksha{Rational(0), Rational(0), -n.left.ru}};
    for (const auto& entry : trace.entries) {
      switch (entry.label) {
        case bija::SolveStepLabel::clear_denominators:
          cur = bija::clear_denominators(cur);
          break;
        case bija::SolveStepLabel::multiply_by_4a: {
          const Rational m = Rational(4) * cur.left.yava;
          cur.left = Paksha{cur.left.yava * m, cur.left.ya * m, cur.left.ru * m};
          cur.right = Paksha{cur.right.yava * m, cur.right.ya * m, cur.right.ru * m};
          break;
        }
        case bija::SolveStepLabel::add_b_squared: {
          // b of the pre-multiplied equation: recover from 4ab term / 4a
          break;
        }
        default:
          break;
      }
      if (entry.label == bija::SolveStepLabel::multiply_by_4a ||
          entry.label == bija::SolveStepLabel::clear_denominators)
        CHECK(entry.eq == cur);
    }
    // every root satisfies the normalized equation exactly
    for (const auto& v : roots.values) CHECK(n.left.evaluate(v).is_zero());
  }
}

TEST_CASE("interest-style and dvikarani quadratics") {
  const auto [r1, t1] = bija::solve_quadratic_madhyamaharana({pk(1, 1, -2), pk(0, 0, 0)});
  REQUIRE(r1.values.size() == 2);
  CHECK(r1.values[0] == ExactScalar(Rational(-2)));
  CHECK(r1.values[1] == ExactScalar(Rational(1)));

  const auto [r2, t2] = bija::solve_quadratic_madhyamaharana({pk(1, 0, -2), pk(0, 0, 0)});
  REQUIRE(r2.values.size() == 2);
  CHECK(r2.values[0] == -ExactScalar::sqrt_of(Rational(2)));
  CHECK(r2.values[1] == ExactScalar::sqrt_of(Rational(2)));

  CHECK_THROWS_WITH_AS((void)bija::solve_quadratic_madhyamaharana({pk(0, 1, -2), pk(0, 0, 0)}),
                       "not quadratic (use solve_linear)", ganita::math_error);
  CHECK_THROWS_WITH_AS((void)bija::solve_quadratic_madhyamaharana({pk(1, 0, 2), pk(0, 0, 0)}),
                       "no real root", ganita::math_error);
  CHECK_THROWS_AS((void)bija::solve_quadratic_madhyamaharana({pk(1, 1, -1), pk(0, 0, 0)}),
                  ganita::inexact_error);  // roots need a two-term radical
}

TEST_CASE("AB 2.25 interest recovers the attested instance") {
  const auto sol = bija::interest_ab_2_25(Rational(100), Rational(4), Rational(14));
  CHECK(sol.x == Rational(10));
  CHECK(sol.by_formula == sol.by_steps);
  CHECK(bija::interest_ab_2_25(Rational(1), Rational(1), Rational(2)).x == Rational(1));
  CHECK(bija::interest_ab_2_25(Rational(100), Rational(4), Rational(0)).x == Rational(0));
  CHECK_THROWS_AS((void)bija::interest_ab_2_25(Rational(0), Rational(1), Rational(1)),
                  ganita::math_error);
}

TEST_CASE("AB 2.25 round trip on random rational instances") {
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<long long> d(1, 60);
    const Rational x(d(rng), d(rng));
    const Rational P(d(rng), d(rng));
    const Rational T(d(rng), d(rng));
    const Rational A = x + (T / P) * x.square();
    const auto sol = bija::interest_ab_2_25(P, T, A);
    CHECK(sol.x == x);
    CHECK(sol.by_formula == sol.by_steps);
  }
}

TEST_CASE("factors from difference and product") {
  const auto [x1, y1] = bija::factors_from_diff_product(Rational(4), Rational(21));
  CHECK(x1 == ExactScalar(Rational(7)));
  CHECK(y1 == ExactScalar(Rational(3)));
  const auto [x2, y2] = bija::factors_from_diff_product(Rational(0), Rational(9));
  CHECK(x2 == ExactScalar(Rational(3)));
  CHECK(y2 == ExactScalar(Rational(3)));
  const auto [x3, y3] = bija::factors_from_diff_product(Rational(2), Rational(0));
  CHECK(x3 == ExactScalar(Rational(2)));
  CHECK(y3 == ExactScalar(Rational(0)));
  CHECK_THROWS_WITH_AS((void)bija::factors_from_diff_product(Rational(0), Rational(-9)),
                       "no real factor pair", ganita::math_error);
}

TEST_CASE("product via squares equals direct multiplication") {
  CHECK(bija::product_via_squares(Rational(3), Rational(4)) == Rational(12));
  CHECK(bija::product_via_squares(Rational(17, 5), Rational(0)) == Rational(0));
  CHECK(bija::product_via_squares(Rational(1), Rational(1)) == Rational(1));
  for (int i = 0; i < 300; ++i) {
    const Rational X = rand_rational(-80, 80);
    const Rational Y = rand_rational(-80, 80);
    CHECK(bija::product_via_squares(X, Y) == X * Y);
    // expansion identities behind the method
    CHECK((X + Y).square() == X.square() + Rational(2) * X * Y + Y.square());
    CHECK((X - Y).square() == X.square() - Rational(2) * X * Y + Y.square());
  }
}

TEST_CASE("parsing the classical two-row layout") {
  notation::NotationDocument doc;
  doc.rows = {"yāva 0 yā 10 rū 8°", "yāva 1 yā 0 rū 1"};
  const Equation e = notation::parse(doc);
  CHECK(e.left == pk(0, 10, -8));
  CHECK(e.right == pk(1, 0, 1));
}

TEST_CASE("ascii transliteration parses identically") {
  notation::NotationDocument uni, ascii;
  uni.rows = {"yāva 0 yā 10 rū 8°", "yāva 1 yā 0 rū 1"};
  ascii.rows = {"yava 0 ya 10 ru -8", "yava 1 ya 0 ru 1"};
  CHECK(notation::parse(uni) == notation::parse(ascii));
}

TEST_CASE("lenient regional negative marks") {
  notation::NotationDocument doc;
  doc.rows = {"ya 1 ru 8+", "ru 0"};
  const Equation e = notation::parse(doc);
  CHECK(e.left.ru == Rational(-8));
  doc.rows = {"ya 1 ru 8x", "ru 0"};
  CHECK(notation::parse(doc).left.ru == Rational(-8));
}

TEST_CASE("absent labels read as zero; minimal equation") {
  notation::NotationDocument doc;
  doc.rows = {"yā 1", "rū 0"};
  const Equation e = notation::parse(doc);
  CHECK(e.left == pk(0, 1, 0));
  CHECK(e.right == pk(0, 0, 0));
  const auto [roots, trace] = bija::solve(e);
  CHECK(roots.values[0] == ExactScalar(Rational(0)));
}

TEST_CASE("notation parse errors") {
  notation::NotationDocument doc;
  doc.rows = {"yā 1 = 2", "rū 0"};
  CHECK_THROWS_AS((void)notation::parse(doc), ganita::parse_error);
  doc.rows = {"gu 3", "rū 0"};
  CHECK_THROWS_AS((void)notation::parse(doc), ganita::parse_error);
  doc.rows = {"yā 1 yā 2", "rū 0"};
  CHECK_THROWS_AS((void)notation::parse(doc), ganita::parse_error);
  doc.rows = {"rū 1 yā 2", "rū 0"};
  CHECK_THROWS_AS((void)notation::parse(doc), ganita::parse_error);  // out of order
  doc.rows = {"yā", "rū 0"};
  CHECK_THROWS_AS((void)notation::parse(doc), ganita::parse_error);  // missing integer
  doc.rows = {"", "rū 0"};
  CHECK_THROWS_AS((void)notation::parse(doc), ganita::parse_error);
}

TEST_CASE("render writes all labels and no operators") {
  const Equation e{pk(0, 10, -8), pk(1, 0, 1)};
  const auto doc = notation::render(e, notation::Encoding::unicode);
  CHECK(doc.rows[0] == "yāva 0 yā 10 rū 8°");
  CHECK(doc.rows[1] == "yāva 1 yā 0 rū 1");
  const auto ascii = notation::render(e, notation::Encoding::ascii);
  CHECK(ascii.rows[0] == "yava 0 ya 10 ru -8");
  const Equation zero{pk(0, 0, 0), pk(0, 0, 0)};
  CHECK(notation::render(zero).rows[0] == "yāva 0 yā 0 rū 0");
  // rationals must be cleared before rendering
  const Equation frac{Paksha{Rational(1, 2), Rational(0), Rational(0)}, pk(0, 0, 0)};
  CHECK_THROWS_AS((void)notation::render(frac), ganita::math_error);
  const Equation cleared = bija::clear_denominators(frac);
  CHECK(notation::render(cleared).rows[0] == "yāva 1 yā 0 rū 0");
}

TEST_CASE("round trip on random integer equations") {
  std::uniform_int_distribution<long long> d(-99, 99);
  for (int i = 0; i < 300; ++i) {
    const Equation e{pk(d(rng), d(rng), d(rng)), pk(d(rng), d(rng), d(rng))};
    for (const auto enc : {notation::Encoding::unicode, notation::Encoding::ascii}) {
      const auto doc = notation::render(e, enc);
      CHECK(notation::parse(doc) == e);
    }
  }
}

TEST_CASE("render is injective on canonical equations") {
  std::uniform_int_distribution<long long> d(-20, 20);
  for (int i = 0; i < 100; ++i) {
    const Equation e1{pk(d(rng), d(rng), d(rng)), pk(d(rng), d(rng), d(rng))};
    const Equation e2{pk(d(rng), d(rng), d(rng)), pk(d(rng), d(rng), d(rng))};
    if (e1 == e2) continue;
    CHECK(notation::render(e1).rows != notation::render(e2).rows);
  }
}

TEST_CASE("documents read from text ignore comments and blanks") {
  std::istringstream in("# the classical example\n\nyāva 0 yā 10 rū 8°\nyāva 1 yā 0 rū 1\n");
  const auto doc = notation::read_document(in);
  CHECK(doc.encoding == notation::Encoding::unicode);
  CHECK(notation::parse(doc).left == pk(0, 10, -8));
  std::istringstream bad("yā 1\n");
  CHECK_THROWS_AS((void)notation::read_document(bad), ganita::parse_error);
}
