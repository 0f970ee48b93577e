#pragma once

#include <stdexcept>
#include <string>

namespace tcg {

enum class ErrorKind {
  invalid_order,
  parse,
  validation,
  corpus_cap,
  invalid_map,
  empty_generating_set,
  symmetry_violation,
  degree_cap,
  size_cap,
  precondition,
  solver_failure,
  no_criterion,
  usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tcg
