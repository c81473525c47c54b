#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geodiff {

enum class ErrorKind {
  Domain,              // input violates an operation's preconditions
  InconsistentSplit,   // cevian split m + n does not match the z-side
  NoTriangle,          // inverse problem has no admissible solution
  Ambiguous,           // inverse problem has several admissible solutions
  Singularity,         // right-hand side or Jacobian degenerates
  TrackingFailure,     // homotopy corrector did not converge
  OracleFailure,       // reference root finder did not converge
  NotConstructible,    // oracle cannot build the requested configuration
  InvariantViolation,  // internal consistency check failed
  Config,              // malformed run configuration
  Io,                  // report could not be written
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace geodiff
