#pragma once

#include <stdexcept>
#include <string>

namespace pu21 {

enum class ErrorKind {
  IsotropicArgument,
  DegenerateSpan,
  NotPolarPoints,
  SignatureError,
  NotLoxodromic,
  EigenFailure,
  InvalidCoords,
  DegenerateTriple,
  NotHyperbolic,
  AxisFailure,
  DeltaOne,
  TraceMismatch,
  PreconditionQ1,
  PreconditionQ123,
  ArgBranch,
  DegenerateSpine,
  FrameFailure,
  ResidualBlowup,
  BadN,
  WindowMiss,
  NotUltraparallel,
  NotOnBoundary,
  RealPartNonzero,
  NotInvariant,
  NotHyperbolicOnSlice,
  SideAmbiguous,
  PatternMismatch,
  PreconditionQuadrangle,
  InvalidInput,
};

const char* to_string(ErrorKind k);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// %g formatting for numbers quoted in error messages.
std::string num(double v);

[[noreturn]] void fail(ErrorKind kind, const std::string& detail = {});

}  // namespace pu21
