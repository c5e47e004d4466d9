#pragma once

#include <array>

#include "pu21/hermitian.hpp"

namespace pu21 {

// Form preservation uses the convention <Ix,Iy> = <x,y>, i.e. I^T G conj(I) = G.
double form_residual(const Mat3& m, const HermitianSpace& s);
bool is_isometry(const Mat3& m, const HermitianSpace& s, const Tolerance& tol = {});

// Divide by the cube root of det whose argument is closest to zero.
Mat3 renormalize_su21(const Mat3& m);

// x -> 2 <x,p>/<p,p> p - x
Mat3 reflection(const Vec3& p, const HermitianSpace& s, const Tolerance& tol = {});

double deltoid_value(cplx z);

struct IsometryClass {
  enum class Tag { RegularElliptic, Loxodromic, Boundary } tag;
  cplx trace;
  double deltoid_value;
};
const char* to_string(IsometryClass::Tag t);
IsometryClass classify(const Mat3& m, const Tolerance& tol = {});

// Roots of x^3 - a x^2 + b x - c by Cardano, each polished by one Newton step.
std::array<cplx, 3> cubic_roots(cplx a, cplx b, cplx c);

struct EigenSystem {
  std::array<cplx, 3> values{};
  std::array<Vec3, 3> vectors{};  // unit Euclidean norm
};
// Throws EigenFailure when two eigenvalues are closer than eq_tol.
EigenSystem eigen_decompose(const Mat3& m, const Tolerance& tol = {});

// Eigenvector for a known eigenvalue: row cross product, then inverse iteration.
Vec3 eigenvector(const Mat3& m, cplx lambda);

struct LoxodromicFrame {
  Vec3 v1, v2, c;        // isotropic, isotropic, positive
  cplx l1, l2, lc;       // matching eigenvalues, |l1| largest
};
LoxodromicFrame loxodromic_frame(const Mat3& m, const HermitianSpace& s, const Tolerance& tol = {});

// Tangent maps t = <.,p>/<p,p> t_dir and t* = <.,t_dir>/<p,p> p, with t_dir
// projected onto the orthogonal complement of p first.
struct TangentPair {
  Mat3 t, t_star;
};
TangentPair tangent_pair(const Vec3& p, const Vec3& t_dir, const HermitianSpace& s,
                         const Tolerance& tol = {});

// || (R^{p+h t} - R^{p-h t}) / 2h - 2(t + t*) ||_inf
double reflection_derivative_residual(const Vec3& p, const Vec3& t_dir, double h,
                                      const HermitianSpace& s, const Tolerance& tol = {});

}  // namespace pu21
