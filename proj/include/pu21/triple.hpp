#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pu21/hermitian.hpp"

namespace pu21 {

// Signs of three points; at most one may be +1.
class SignTriple {
 public:
  SignTriple(int s1, int s2, int s3);  // throws InvalidCoords
  int operator[](int i) const { return s_[i]; }
  const std::array<int, 3>& values() const { return s_; }

 private:
  std::array<int, 3> s_;
};

struct SurfaceCoords {
  double s1 = 0.0;
  double s2 = 0.0;
  double s = 0.0;
  SignTriple sigma{1, -1, -1};
  cplx tau{0.0, 0.0};
};

inline cplx kappa_of(cplx tau) { return (tau - 3.0) / 8.0; }

double surface_residual(double s1, double s2, double s, cplx kappa);

struct InequalityReport {
  bool ok = false;
  // left-minus-right, oriented so that every entry must be positive
  std::vector<std::pair<std::string, double>> slacks;
};
InequalityReport inequality_check(const SurfaceCoords& c);

std::vector<double> solve_s(double s1, double s2, cplx kappa, const Tolerance& tol = {});

Mat3 gram_from_coords(const SurfaceCoords& c, const Tolerance& tol = {});

struct RegularTriple {
  HermitianSpace space;
  std::array<Vec3, 3> p;
};
RegularTriple realize_triple(const SurfaceCoords& c, const Tolerance& tol = {});

// Checks pairwise nonorthogonality and the Gram determinant sign.
void validate_triple(const RegularTriple& t, const Tolerance& tol = {});

SurfaceCoords coords_from_triple(const RegularTriple& t, const Tolerance& tol = {});

// tr(R^{p3} R^{p2} R^{p1})
cplx triple_trace(const RegularTriple& t, const Tolerance& tol = {});

}  // namespace pu21
