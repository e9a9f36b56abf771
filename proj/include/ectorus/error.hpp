#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ectorus {

enum class ErrorKind {
  division_by_zero,
  domain,
  incompatible_field,
  parameter,
  resource,
  parse,
  degenerate_curve,
  singular_curve,
  pole,
  contract,
  not_in_domain,
  out_of_theorem_scope,
  inexact_refused,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::division_by_zero:     return "division-by-zero";
    case ErrorKind::domain:               return "domain";
    case ErrorKind::incompatible_field:   return "incompatible-field";
    case ErrorKind::parameter:            return "parameter";
    case ErrorKind::resource:             return "resource";
    case ErrorKind::parse:                return "parse";
    case ErrorKind::degenerate_curve:     return "degenerate-curve";
    case ErrorKind::singular_curve:       return "singular-curve";
    case ErrorKind::pole:                 return "pole";
    case ErrorKind::contract:             return "contract";
    case ErrorKind::not_in_domain:        return "not-in-domain";
    case ErrorKind::out_of_theorem_scope: return "out-of-theorem-scope";
    case ErrorKind::inexact_refused:      return "inexact-refused";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

private:
  ErrorKind kind_;
};

// Grammar violation with a 1-based character position.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::parse,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace ectorus
