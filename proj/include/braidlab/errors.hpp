#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace braidlab {

// All library failures carry a short machine-readable code; the CLI maps the
// code straight into its {"error": ...} output. Codes in use:
//   MalformedTable, MalformedTables, MalformedInput, Degenerate, NotBraided,
//   TooLarge, BadIndex, CapExceeded, NotAnAutomorphism, InvariantViolation,
//   NotASolution, ShapeMismatch, BadPerturbation, ConstraintViolation,
//   NotInvertible, Unsupported
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

}  // namespace braidlab
