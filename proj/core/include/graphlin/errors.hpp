#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphlin {

/// Malformed input file. Carries the source name and 1-based line number so
/// front ends can print `file:line: message` diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// A graph violates a structural invariant (endpoint range, duplicate arc, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural label does not parse under its family's grammar.
class LabelSyntaxError : public std::runtime_error {
 public:
  LabelSyntaxError(int token, const std::string& message)
      : std::runtime_error("token " + std::to_string(token) + ": " + message), token_(token) {}

  int token() const noexcept { return token_; }

 private:
  int token_;
};

/// Strict decoding met a label sequence outside the well-formed set.
class IllFormedError : public std::runtime_error {
 public:
  IllFormedError(std::size_t repair_count, const std::string& first)
      : std::runtime_error("ill-formed label sequence (" + std::to_string(repair_count) +
                           " repair(s)); first: " + first),
        repair_count_(repair_count) {}

  std::size_t repair_count() const noexcept { return repair_count_; }

 private:
  std::size_t repair_count_;
};

/// Gold and predicted corpora do not line up sentence-by-sentence.
class MisalignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphlin
