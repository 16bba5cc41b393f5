#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chomp {

// Row length does not fit a 16-bit field, or too many rows to pack.
class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A tuple that violates the non-increasing row invariant.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Refusal to start a computation whose estimated size exceeds a ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A statistical procedure that cannot produce a meaningful answer on its
// input (empty window, constant data, one class only, ...).
class AnalysisError : public std::runtime_error {
 public:
  enum class Kind { empty_window, degenerate_fit, zero_variance, insufficient_data, single_class };

  AnalysisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Malformed input file. line() is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  enum class Rule {
    header,
    column_count,
    bad_number,
    non_increasing,
    ordering,
    count_mismatch,
    missing_trailer,
    magic,
    version,
    truncated,
    unsorted,
  };

  FormatError(Rule rule, std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        rule_(rule),
        line_(line) {}

  Rule rule() const noexcept { return rule_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Rule rule_;
  std::size_t line_;
};

}  // namespace chomp
