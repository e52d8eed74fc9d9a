#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "bija/equation.hpp"

namespace notation {

using bija::Equation;

enum class Encoding { unicode, ascii };

/// The two-row pakṣa layout: top row is the first side, bottom row the
/// second; balance between the rows is understood, never written.
struct NotationDocument {
  std::array<std::string, 2> rows;
  Encoding encoding = Encoding::unicode;
};

/// Parse the two rows into an Equation. Labels may be written with
/// diacritics (yāva/yā/rū) or as plain ascii (yava/ya/ru); each row lists
/// them in that order, at most once, each followed by one integer. The
/// negative mark is a ring "°" after the number (unicode) or a "-" before
/// it (ascii); trailing "+" and "x" marks are accepted leniently. An
/// explicit equality sign anywhere is an anachronistic token and rejected.
Equation parse(const NotationDocument& doc);

/// Two non-empty rows from UTF-8 text; "#" comments and blank lines are
/// ignored. Encoding is detected from the labels and negative marks.
NotationDocument read_document(std::istream& in);
NotationDocument read_document_from_file(const std::string& path);

/// Emit the canonical two-row layout: all three labels present, zeros
/// written out, no operator or equality symbols. Coefficients must be
/// integers; clear denominators first.
NotationDocument render(const Equation& e, Encoding encoding = Encoding::unicode);

}  // namespace notation
