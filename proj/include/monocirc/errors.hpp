#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monocirc {

/// A gate id or circuit shape that does not refer to anything valid.
class StructuralError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Malformed circuit text. Carries the 1-based line that failed.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Request outside the monotone model, e.g. a Schur polynomial that is identically zero.
class ModelError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Brute-force enumeration would exceed its configured cap.
class EnumerationLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Bounded-integer evaluation overflowed.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

} // namespace monocirc
