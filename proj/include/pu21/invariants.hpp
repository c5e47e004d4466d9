#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pu21/quadrangle.hpp"
#include "pu21/rational.hpp"

namespace pu21 {

Rational orbifold_euler_char(int n);  // 2 - n/2, n >= 5

struct ToledoResult {
  double raw_mod2 = 0.0;         // representative in (-1, 1]
  Rational tau;
  Rational chi;
  double snap_residual = 0.0;    // |raw_mod2 - tau|
  std::array<double, 3> steps{}; // Re <x_{i+1}, x_i>, all negative
};

// Needs a pentagon whose quadrangle report is all_ok. x1 defaults to the witness.
ToledoResult toledo(const Pentagon& pent, const std::optional<Vec3>& x1 = {},
                    const Tolerance& tol = {});

// Geometry of a bisector segment between slices with polars qa, qb.
struct Spine {
  Vec3 f;       // polar of the complex spine, <f,f> = 1
  Vec3 ca, cb;  // real spine vertices on the two slices, <c,c> = -1, <ca,cb> < 0
  Vec3 mid;     // ca + cb
};
Spine bisector_spine(const Vec3& qa, const Vec3& qb, const HermitianSpace& s,
                     const Tolerance& tol = {});

Vec3 middle_slice_polar(const Vec3& qa, const Vec3& qb, const HermitianSpace& s,
                        const Tolerance& tol = {});

enum class Orientation { Cyclic, Anticyclic };
struct CyclicOrder {
  Orientation orientation;
  cplx product;  // <a,b><b,c><c,a>
};
// Cyclic iff Im < 0. When polar is given every point must be orthogonal to it.
CyclicOrder cyclic_order(const Vec3& a, const Vec3& b, const Vec3& c, const HermitianSpace& s,
                         const std::optional<Vec3>& polar = {}, const Tolerance& tol = {});

// Im of the cyclic product of (z, Iz, I^2 z); positive means clockwise motion.
double motion_test(const Mat3& iso, const Vec3& z, const HermitianSpace& s);

struct BoundaryFixedPoint {
  Vec3 z;
  cplx eigenvalue;
};
// Isotropic fixed point of I on the boundary of the slice with polar c_polar; the
// one with the smaller eigenvalue modulus. Scaled so <z, ref> = -1 when ref is given.
BoundaryFixedPoint holonomy_boundary_fixed_point(const Vec3& c_polar, const Mat3& iso,
                                                 const HermitianSpace& s,
                                                 const std::optional<Vec3>& ref = {},
                                                 const Tolerance& tol = {});

// Endpoint, on the slice with polar slice_polar, of the meridian through the
// boundary point xi of the bisector (qa, qb). The result is c + e f with <c,c> = -1,
// <f,f> = 1 and e the unit phase of xi's component along f.
Vec3 meridional_endpoint(const Vec3& qa, const Vec3& qb, const Vec3& slice_polar, const Vec3& xi,
                         const HermitianSpace& s, const Tolerance& tol = {});

struct EulerOptions {
  std::optional<Vec3> witness;
  std::optional<std::pair<Vec3, Vec3>> samples;  // two points of the boundary of C1
};

struct EulerCertificate {
  Vec3 m;                    // middle slice of the diagonal segment (q1, q3)
  std::array<Vec3, 4> mi;    // middle slices of (q_i, q_{i+1})
  Vec3 z1;
  cplx z1_eigenvalue;        // under R^m R3 R2
  cplx z1_eigenvalue_left;   // under R5 R4 R^m
  std::vector<std::pair<std::string, double>> direction_tests;
  std::vector<std::pair<std::string, double>> checks;  // closure residuals
  std::vector<std::pair<std::string, bool>> gates;
  std::array<Rational, 4> segment_signs;
  std::optional<Rational> e;  // empty when a gate fails
  std::string failed_gate;

  double test(const std::string& name) const;
};

// Runs the pipeline and records every gate; never throws PatternMismatch.
EulerCertificate euler_certificate(const Pentagon& pent, const EulerOptions& opt = {},
                                   const Tolerance& tol = {});
// Same, but throws PatternMismatch naming the first failed gate.
EulerCertificate euler_number(const Pentagon& pent, const EulerOptions& opt = {},
                              const Tolerance& tol = {});

// (3 tau - 2 chi) / 2
Rational euler_from_toledo(const Rational& tau, const Rational& chi);
Rational euler_cross_check(const Pentagon& pent, const std::optional<Vec3>& x1 = {},
                           const Tolerance& tol = {});

}  // namespace pu21
