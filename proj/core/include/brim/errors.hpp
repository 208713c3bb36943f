#pragma once

#include <stdexcept>
#include <string>

namespace brim {

// Failure taxonomy shared by all layers. The CLI maps these to exit codes,
// check runners map fit failures to INAPPLICABLE verdicts.
enum class errc {
  invalid_ring,
  invalid_ideal,
  ring_mismatch,
  infinite_colength,
  resource_limit,
  unsupported,
  not_contained,
  not_stabilized,
  convention_mismatch,
  not_a_reduction,
  non_primary,
  oracle_mismatch,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

// Parse errors carry a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(errc::parse_error, message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace brim
