#include "geodiff/error.hpp"

namespace geodiff {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::InconsistentSplit: return "inconsistent split";
    case ErrorKind::NoTriangle: return "no triangle";
    case ErrorKind::Ambiguous: return "ambiguous solution";
    case ErrorKind::Singularity: return "singularity";
    case ErrorKind::TrackingFailure: return "tracking failure";
    case ErrorKind::OracleFailure: return "oracle failure";
    case ErrorKind::NotConstructible: return "not constructible";
    case ErrorKind::InvariantViolation: return "invariant violation";
    case ErrorKind::Config: return "config error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

}  // namespace geodiff
