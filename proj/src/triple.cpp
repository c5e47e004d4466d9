#include "pu21/triple.hpp"

#include <cmath>

#include "pu21/errors.hpp"
#include "pu21/isometry.hpp"

namespace pu21 {

SignTriple::SignTriple(int s1, int s2, int s3) : s_{s1, s2, s3} {
  int plus = 0;
  for (int v : s_) {
    if (v != 1 && v != -1) fail(ErrorKind::InvalidCoords, "signs must be +1 or -1");
    if (v == 1) ++plus;
  }
  if (plus > 1) fail(ErrorKind::InvalidCoords, "at most one sign may be +1");
}

double surface_residual(double s1, double s2, double s, cplx kappa) {
  return s1 * s1 * s2 + s1 * s2 * s2 - 2.0 * s1 * s2 * s + s * s + 2.0 * kappa.real() * s1 * s2 +
         kappa.imag() * kappa.imag();
}

InequalityReport inequality_check(const SurfaceCoords& c) {
  const int s12 = c.sigma[0] * c.sigma[1];
  const int s23 = c.sigma[1] * c.sigma[2];
  const int s123 = s12 * c.sigma[2];
  const cplx k = kappa_of(c.tau);
  InequalityReport r;
  r.slacks = {
      {"sigma12_s1", s12 * c.s1},
      {"sigma12_s1_minus_sigma12", s12 * c.s1 - s12},
      {"sigma23_s2", s23 * c.s2},
      {"sigma23_s2_minus_sigma23", s23 * c.s2 - s23},
      {"neg_sigma123_2rekappa_plus_1", -s123 * (2.0 * k.real() + 1.0)},
  };
  r.ok = true;
  for (const auto& [name, v] : r.slacks) r.ok = r.ok && v > 0.0;
  return r;
}

std::vector<double> solve_s(double s1, double s2, cplx kappa, const Tolerance& tol) {
  const double b = s1 * s2;
  const double c = s1 * s1 * s2 + s1 * s2 * s2 + 2.0 * kappa.real() * s1 * s2 +
                   kappa.imag() * kappa.imag();
  const double disc = b * b - c;
  if (disc < 0.0) return {};
  const double r = std::sqrt(disc);
  if (2.0 * r < tol.eq_tol) return {b};
  return {b - r, b + r};
}

static void validate_coords(const SurfaceCoords& c, const Tolerance& tol) {
  if (!(deltoid_value(c.tau) > 0.0))
    fail(ErrorKind::InvalidCoords, "tau lies on or inside the deltoid");
  const double res = surface_residual(c.s1, c.s2, c.s, kappa_of(c.tau));
  if (!(std::abs(res) < tol.eq_tol))
    fail(ErrorKind::InvalidCoords, "point is off the surface, residual " + std::to_string(res));
  const auto ineq = inequality_check(c);
  for (const auto& [name, v] : ineq.slacks)
    if (!(v > 0.0)) fail(ErrorKind::InvalidCoords, "inequality " + name + " fails");
}

Mat3 gram_from_coords(const SurfaceCoords& c, const Tolerance& tol) {
  validate_coords(c, tol);
  const auto& sg = c.sigma;
  const cplx k = kappa_of(c.tau);
  const double g12 = std::sqrt(sg[0] * sg[1] * c.s1);
  const double g23 = std::sqrt(sg[1] * sg[2] * c.s2);
  const cplx g13 = double(sg[0] * sg[1] * sg[2]) * cplx(c.s, -k.imag()) / (g12 * g23);
  Mat3 g = zero_matrix();
  g[0][0] = sg[0];
  g[1][1] = sg[1];
  g[2][2] = sg[2];
  g[0][1] = g[1][0] = g12;
  g[1][2] = g[2][1] = g23;
  g[0][2] = g13;
  g[2][0] = std::conj(g13);
  HermitianSpace check(g);  // throws SignatureError
  return g;
}

RegularTriple realize_triple(const SurfaceCoords& c, const Tolerance& tol) {
  RegularTriple t{HermitianSpace(gram_from_coords(c, tol)),
                  {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, Vec3{0.0, 0.0, 1.0}}};
  validate_triple(t, tol);
  return t;
}

void validate_triple(const RegularTriple& t, const Tolerance& tol) {
  const auto& s = t.space;
  std::array<Vec3, 3> u{};
  for (int i = 0; i < 3; ++i) {
    if (is_isotropic(t.p[i], s, tol)) fail(ErrorKind::DegenerateTriple, "isotropic point");
    u[i] = normalized(t.p[i], s);
  }
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      if (std::abs(s.inner(u[i], u[k])) <= tol.eq_tol)
        fail(ErrorKind::DegenerateTriple, "orthogonal pair");
  Mat3 g{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) g[i][k] = s.inner(u[i], u[k]);
  if (!(det(g).real() < -tol.eq_tol))
    fail(ErrorKind::DegenerateTriple, "points lie on one complex line");
}

cplx triple_trace(const RegularTriple& t, const Tolerance& tol) {
  const auto& s = t.space;
  return trace(reflection(t.p[2], s, tol) * reflection(t.p[1], s, tol) *
               reflection(t.p[0], s, tol));
}

SurfaceCoords coords_from_triple(const RegularTriple& t, const Tolerance& tol) {
  validate_triple(t, tol);
  const auto& s = t.space;
  const auto sg = [&](int i) { return sign(t.p[i], s, tol) == Sign::Positive ? 1 : -1; };
  SurfaceCoords c;
  c.sigma = SignTriple(sg(0), sg(1), sg(2));
  c.s1 = tance(t.p[0], t.p[1], s, tol);
  c.s2 = tance(t.p[1], t.p[2], s, tol);
  const cplx eta = s.inner(t.p[0], t.p[1]) * s.inner(t.p[1], t.p[2]) * s.inner(t.p[2], t.p[0]) /
                   (s.inner(t.p[0], t.p[0]) * s.inner(t.p[1], t.p[1]) * s.inner(t.p[2], t.p[2]));
  c.s = eta.real();
  c.tau = triple_trace(t, tol);
  if (classify(reflection(t.p[2], s, tol) * reflection(t.p[1], s, tol) *
                   reflection(t.p[0], s, tol),
               tol)
          .tag != IsometryClass::Tag::Loxodromic)
    fail(ErrorKind::DegenerateTriple, "R3 R2 R1 is not loxodromic");
  return c;
}

}  // namespace pu21
