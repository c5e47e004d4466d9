#include "pu21/errors.hpp"

#include <cstdio>

namespace pu21 {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::IsotropicArgument: return "IsotropicArgument";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::NotPolarPoints: return "NotPolarPoints";
    case ErrorKind::SignatureError: return "SignatureError";
    case ErrorKind::NotLoxodromic: return "NotLoxodromic";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::InvalidCoords: return "InvalidCoords";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::AxisFailure: return "AxisFailure";
    case ErrorKind::DeltaOne: return "DeltaOne";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::PreconditionQ1: return "PreconditionQ1";
    case ErrorKind::PreconditionQ123: return "PreconditionQ123";
    case ErrorKind::ArgBranch: return "ArgBranch";
    case ErrorKind::DegenerateSpine: return "DegenerateSpine";
    case ErrorKind::FrameFailure: return "FrameFailure";
    case ErrorKind::ResidualBlowup: return "ResidualBlowup";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::WindowMiss: return "WindowMiss";
    case ErrorKind::NotUltraparallel: return "NotUltraparallel";
    case ErrorKind::NotOnBoundary: return "NotOnBoundary";
    case ErrorKind::RealPartNonzero: return "RealPartNonzero";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotHyperbolicOnSlice: return "NotHyperbolicOnSlice";
    case ErrorKind::SideAmbiguous: return "SideAmbiguous";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::PreconditionQuadrangle: return "PreconditionQuadrangle";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

static std::string compose(ErrorKind kind, const std::string& detail) {
  std::string s = to_string(kind);
  if (!detail.empty()) s += ": " + detail;
  return s;
}

GeometryError::GeometryError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) { throw GeometryError(kind, detail); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace pu21
