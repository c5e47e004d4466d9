#include "pu21/pentagon.hpp"

#include <cmath>
#include <numbers>

#include "pu21/errors.hpp"
#include "pu21/isometry.hpp"

namespace pu21 {

cplx value_of(CubeRoot d) {
  const double h = std::sqrt(3.0) / 2.0;
  switch (d) {
    case CubeRoot::One: return {1.0, 0.0};
    case CubeRoot::Omega: return {-0.5, h};
    case CubeRoot::Omega2: return {-0.5, -h};
  }
  return {1.0, 0.0};
}

const char* to_string(CubeRoot d) {
  switch (d) {
    case CubeRoot::One: return "1";
    case CubeRoot::Omega: return "omega";
    case CubeRoot::Omega2: return "omega2";
  }
  return "1";
}

CubeRoot cube_root_from_string(const std::string& s) {
  if (s == "1") return CubeRoot::One;
  if (s == "omega") return CubeRoot::Omega;
  if (s == "omega2") return CubeRoot::Omega2;
  fail(ErrorKind::InvalidInput, "delta must be 1, omega or omega2, got '" + s + "'");
}

Mat3 Pentagon::reflection_at(int i, const Tolerance& tol) const {
  if (i < 1 || i > 5) fail(ErrorKind::InvalidInput, "reflection index " + std::to_string(i));
  return reflection(p[i - 1], space, tol);
}

Mat3 relation_product(const Pentagon& pent, const Tolerance& tol) {
  Mat3 m = identity();
  for (int i = 1; i <= 5; ++i) m = pent.reflection_at(i, tol) * m;
  return m;
}

double relation_residual(const Pentagon& pent, const Tolerance& tol) {
  return norm_inf(relation_product(pent, tol) - value_of(pent.delta) * identity());
}

// On the complex line of the axis, with <v1,v2> = 1, the points
// p(u) = e^{u/2} v1 - e^{-u/2} v2 run along the real geodesic and
// ta(p(u), p(w)) = cosh^2((u - w)/2).
std::pair<Vec3, Vec3> decompose_loxodromic(const Mat3& f, double t45, const HermitianSpace& s,
                                           const Tolerance& tol,
                                           const std::optional<std::pair<Vec3, Vec3>>& anchors) {
  const IsometryClass cls = classify(f, tol);
  if (cls.tag != IsometryClass::Tag::Loxodromic || std::abs(cls.trace.imag()) > tol.eq_tol ||
      !(cls.trace.real() > 3.0))
    fail(ErrorKind::NotHyperbolic, "trace is not real and greater than 3");
  if (!(t45 > 1.0)) fail(ErrorKind::NotHyperbolic, "tance of the pair must exceed 1");
  const double expected = (cls.trace.real() + 1.0) / 4.0;
  if (std::abs(expected - t45) > tol.eq_tol * std::max(1.0, t45))
    fail(ErrorKind::NotHyperbolic, "tance does not match the trace of F");

  LoxodromicFrame fr;
  try {
    fr = loxodromic_frame(f, s, tol);
  } catch (const GeometryError& e) {
    fail(ErrorKind::AxisFailure, e.what());
  }
  const cplx h = s.inner(fr.v1, fr.v2);
  if (std::abs(h) == 0.0) fail(ErrorKind::AxisFailure, "fixed points are orthogonal");
  const Vec3 v1 = fr.v1;
  const Vec3 v2 = (1.0 / std::conj(h)) * fr.v2;

  // Axis points are e^{u/2} v1 - e^{-u/2} v2; the foot of x sits at log|<x,v2>/<x,v1>|.
  double center = 0.0;
  if (anchors) {
    auto foot = [&](const Vec3& x) {
      const double a = std::abs(s.inner(x, v2)), b = std::abs(s.inner(x, v1));
      if (!(a > 0.0 && b > 0.0)) fail(ErrorKind::AxisFailure, "anchor projects to an axis endpoint");
      return std::log(a / b);
    };
    center = 0.5 * (foot(anchors->first) + foot(anchors->second));
  }
  auto axis_point = [&](double u) { return std::exp(u / 2.0) * v1 - std::exp(-u / 2.0) * v2; };

  const double d = 2.0 * std::acosh(std::sqrt(t45));
  Vec3 best4{}, best5{};
  double best_res = INFINITY;
  for (double sg : {1.0, -1.0}) {
    const Vec3 p4 = axis_point(center + sg * d / 2.0);
    const Vec3 p5 = axis_point(center - sg * d / 2.0);
    const double res = norm_inf(reflection(p4, s, tol) * reflection(p5, s, tol) - f);
    if (res < best_res) {
      best_res = res;
      best4 = p4;
      best5 = p5;
    }
  }
  if (!(best_res < tol.residual_tol))
    fail(ErrorKind::AxisFailure, "recomposed product misses F by " + num(best_res));
  return {normalized(best4, s), normalized(best5, s)};
}

Pentagon build_pentagon(const SurfaceCoords& coords, CubeRoot delta, const Tolerance& tol) {
  if (delta == CubeRoot::One)
    fail(ErrorKind::DeltaOne, "no relation of this sign type exists with delta = 1");
  if (coords.sigma.values() != std::array<int, 3>{1, -1, -1})
    fail(ErrorKind::InvalidCoords, "sign triple must be (+,-,-)");
  const cplx tr_f = std::conj(value_of(delta)) * coords.tau;
  if (std::abs(tr_f.imag()) > tol.eq_tol || !(tr_f.real() > 3.0))
    fail(ErrorKind::TraceMismatch, "conj(delta) * tau must be real and greater than 3");

  // Put tau exactly on the ray delta * R and move s to the matching root, otherwise a
  // rounded tau leaves F with a slightly complex trace that no pair of reflections produces.
  SurfaceCoords c = coords;
  c.tau = value_of(delta) * tr_f.real();
  const auto roots = solve_s(c.s1, c.s2, kappa_of(c.tau), tol);
  if (roots.empty()) fail(ErrorKind::InvalidCoords, "no s solves the surface equation");
  c.s = roots.front();
  for (double r : roots)
    if (std::abs(r - coords.s) < std::abs(c.s - coords.s)) c.s = r;
  if (std::abs(c.s - coords.s) > 1e-6 * std::max(1.0, std::abs(coords.s)))
    fail(ErrorKind::InvalidCoords, "s is not a root of the surface equation");

  RegularTriple t = realize_triple(c, tol);
  const auto& s = t.space;
  const Mat3 t321 = reflection(t.p[2], s, tol) * reflection(t.p[1], s, tol) *
                    reflection(t.p[0], s, tol);
  // R5 R4 = delta (R3 R2 R1)^{-1}, hence F = R4 R5 = conj(delta) R3 R2 R1
  const Mat3 f = std::conj(value_of(delta)) * t321;
  const double t45 = (tr_f.real() + 1.0) / 4.0;
  const auto [p4, p5] = decompose_loxodromic(f, t45, s, tol, std::make_pair(t.p[2], t.p[0]));

  Pentagon pent{s, {t.p[0], t.p[1], t.p[2], p4, p5}, delta};
  validate_pentagon(pent, tol);
  return pent;
}

Pentagon reversed_relation(const Pentagon& pent) {
  CubeRoot d = pent.delta;
  if (d == CubeRoot::Omega2) d = CubeRoot::Omega;
  else if (d == CubeRoot::Omega) d = CubeRoot::Omega2;
  return Pentagon{pent.space, {pent.p[0], pent.p[4], pent.p[3], pent.p[2], pent.p[1]}, d};
}

PConditions p_conditions(const Pentagon& pent, const Tolerance& tol) {
  PConditions r;
  r.p1_ok = true;
  for (int i = 0; i < 5; ++i) {
    for (int k = i + 1; k < 5; ++k) {
      const double t = tance(pent.p[i], pent.p[k], pent.space, tol);
      r.tances.emplace_back("ta_p" + std::to_string(i + 1) + "_p" + std::to_string(k + 1), t);
      if (std::abs(t) < tol.eq_tol || std::abs(t - 1.0) < tol.eq_tol) r.p1_ok = false;
    }
  }
  for (int i = 0; i < 5; ++i) r.signs[i] = static_cast<int>(sign(pent.p[i], pent.space, tol));
  r.p2_ok = r.signs == std::array<int, 5>{1, -1, -1, -1, -1};
  r.residual = relation_residual(pent, tol);
  r.p3_ok = r.residual < tol.residual_tol;
  return r;
}

void validate_pentagon(const Pentagon& pent, const Tolerance& tol) {
  const PConditions c = p_conditions(pent, tol);
  if (!c.p2_ok) fail(ErrorKind::InvalidInput, "sign list is not (+,-,-,-,-)");
  if (!c.p3_ok)
    fail(ErrorKind::InvalidInput, "relation residual " + num(c.residual));
}

Pentagon apply_isometry(const Pentagon& pent, const Mat3& iso) {
  Pentagon out = pent;
  for (int i = 0; i < 5; ++i) out.p[i] = iso * pent.p[i];
  return out;
}

}  // namespace pu21
