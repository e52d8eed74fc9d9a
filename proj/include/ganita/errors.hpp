#pragma once

#include <stdexcept>
#include <string>

namespace ganita {

// Domain-rule violations: zero denominators, short cords, unknown units...
class math_error : public std::runtime_error {
public:
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact operation would leave the closed scalar domain
// (e.g. rational + surd). Callers switch to the approximate path.
class inexact_error : public math_error {
public:
  explicit inexact_error(const std::string& what) : math_error(what) {}
};

// Malformed input text (notation files, CLI problem strings, JSON).
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ganita
