#include "notation/notation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "ganita/errors.hpp"

namespace notation {

using bija::Paksha;
using ganita::BigInt;
using ganita::parse_error;
using ganita::Rational;

namespace {

const std::string kYavaU = "yāva";  // yāva
const std::string kYaU = "yā";      // yā
const std::string kRuU = "rū";      // rū
const std::string kRing = "°";      // °

struct Token {
  std::string text;
  size_t column;  // byte offset within the row
};

std::vector<Token> tokenize(const std::string& row) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < row.size()) {
    while (i < row.size() && std::isspace(static_cast<unsigned char>(row[i]))) ++i;
    if (i >= row.size()) break;
    const size_t start = i;
    while (i < row.size() && !std::isspace(static_cast<unsigned char>(row[i]))) ++i;
    out.push_back({row.substr(start, i - start), start + 1});
  }
  return out;
}

// 0 = yāva, 1 = yā, 2 = rū, -1 = not a label.
int label_index(const std::string& t) {
  if (t == kYavaU || t == "yava") return 0;
  if (t == kYaU || t == "ya") return 1;
  if (t == kRuU || t == "ru") return 2;
  return -1;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Rational parse_coefficient(const Token& tok) {
  std::string t = tok.text;
  bool negative = false;
  if (ends_with(t, kRing)) {  // ring mark after the number
    negative = true;
    t.erase(t.size() - kRing.size());
  } else if (!t.empty() && (t.back() == '+' || t.back() == 'x')) {
    // regional variant marks, accepted on parse only
    negative = true;
    t.pop_back();
  } else if (t.size() > 1 && t.front() == '-') {
    negative = true;
    t.erase(0, 1);
  }
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("expected an integer at column " + std::to_string(tok.column) + ", got '" +
                      tok.text + "'");
  BigInt n(t);
  return Rational(negative ? -n : n);
}

Paksha parse_row(const std::string& row, int row_number) {
  const auto tokens = tokenize(row);
  if (tokens.empty()) throw parse_error("row " + std::to_string(row_number) + " is empty");

  Rational coeff[3];
  bool seen[3] = {false, false, false};
  int last = -1;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.text.find('=') != std::string::npos)
      throw parse_error("anachronistic token '" + tok.text + "' at column " +
                        std::to_string(tok.column));
    const int idx = label_index(tok.text);
    if (idx < 0)
      throw parse_error("unknown label '" + tok.text + "' at column " +
                        std::to_string(tok.column));
    if (seen[idx])
      throw parse_error("duplicate label '" + tok.text + "' at column " +
                        std::to_string(tok.column));
    if (idx < last)
      throw parse_error("label '" + tok.text + "' out of order at column " +
                        std::to_string(tok.column));
    if (i + 1 >= tokens.size())
      throw parse_error("missing integer after label '" + tok.text + "'");
    const Token& num = tokens[++i];
    if (num.text.find('=') != std::string::npos)
      throw parse_error("anachronistic token '" + num.text + "' at column " +
                        std::to_string(num.column));
    if (label_index(num.text) >= 0)
      throw parse_error("missing integer after label '" + tok.text + "'");
    coeff[idx] = parse_coefficient(num);
    seen[idx] = true;
    last = idx;
  }
  return Paksha{coeff[0], coeff[1], coeff[2]};
}

}  // namespace

Equation parse(const NotationDocument& doc) {
  if (doc.rows[0].empty() || doc.rows[1].empty())
    throw parse_error("a notation document needs two non-empty rows");
  return Equation{parse_row(doc.rows[0], 1), parse_row(doc.rows[1], 2)};
}

NotationDocument read_document(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  bool saw_unicode = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.find(kYaU) != std::string::npos || line.find(kRing) != std::string::npos)
      saw_unicode = true;
    rows.push_back(line);
  }
  if (rows.size() != 2)
    throw parse_error("expected exactly 2 rows, found " + std::to_string(rows.size()));
  return NotationDocument{{rows[0], rows[1]}, saw_unicode ? Encoding::unicode : Encoding::ascii};
}

NotationDocument read_document_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open notation file: " + path);
  return read_document(in);
}

namespace {

std::string render_row(const Paksha& p, Encoding enc) {
  const auto coeff = [&](const Rational& c) -> std::string {
    if (!c.is_integer()) throw ganita::math_error("notation carries integers only");
    if (c.sign() >= 0) return c.str();
    if (enc == Encoding::unicode) return (-c).str() + kRing;
    return c.str();
  };
  if (enc == Encoding::unicode)
    return kYavaU + " " + coeff(p.yava) + " " + kYaU + " " + coeff(p.ya) + " " + kRuU + " " +
           coeff(p.ru);
  return "yava " + coeff(p.yava) + " ya " + coeff(p.ya) + " ru " + coeff(p.ru);
}

}  // namespace

NotationDocument render(const Equation& e, Encoding encoding) {
  return NotationDocument{{render_row(e.left, encoding), render_row(e.right, encoding)}, encoding};
}

}  // namespace notation
