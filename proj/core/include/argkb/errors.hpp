#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argkb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or knowledge-base text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the "line:column:" prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource cap (atoms, subset checks, clauses) was hit. This
/// is never reported as UNSAT or as a failed query.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap, std::size_t limit);

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

/// A knowledge base violates a structural invariant (duplicate formula,
/// badly ordered layer weights, ...).
class InvalidKnowledgeBase : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace argkb
