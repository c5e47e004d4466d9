#include "pu21/invariants.hpp"

#include <cmath>
#include <numbers>

#include "pu21/errors.hpp"
#include "pu21/isometry.hpp"

namespace pu21 {

Rational orbifold_euler_char(int n) {
  if (n < 5) fail(ErrorKind::BadN, "n = " + std::to_string(n));
  return Rational(2) - Rational(n, 2);
}

Rational euler_from_toledo(const Rational& tau, const Rational& chi) {
  return (Rational(3) * tau - Rational(2) * chi) / Rational(2);
}

static void require_all_ok(const QuadrangleReport& rep) {
  if (!rep.all_ok)
    fail(ErrorKind::PreconditionQuadrangle,
         rep.first_failure.empty() ? "quadrangle checks did not pass"
                                   : "failing slack " + rep.first_failure);
}

ToledoResult toledo(const Pentagon& pent, const std::optional<Vec3>& x1, const Tolerance& tol) {
  require_all_ok(quadrangle_report(pent, x1, tol));
  const QuadrangleData d = polar_sequence(pent, x1, tol);
  const auto& s = d.space;

  std::array<Vec3, 4> x;
  x[0] = normalized(d.witness, s);
  for (int i = 1; i < 4; ++i) x[i] = d.r[i] * x[i - 1];

  ToledoResult out;
  for (int i = 0; i < 3; ++i) {
    const cplx v = s.inner(x[i + 1], x[i]);
    if (!(v.real() < 0.0) || std::abs(v.imag()) > 1e-6 * std::abs(v))
      fail(ErrorKind::PreconditionQuadrangle, "consecutive witness images are not in the same sheet");
    out.steps[i] = v.real();
  }

  const double raw = (std::arg(s.inner(x[2], x[1]) * s.inner(x[1], x[0])) +
                      std::arg(s.inner(x[0], x[3]) * s.inner(x[3], x[2]))) /
                     std::numbers::pi;
  double r = std::fmod(raw, 2.0);
  if (r <= -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  out.raw_mod2 = r;

  const auto snapped = snap_rational(r, 12, 1e-6);
  if (!snapped) fail(ErrorKind::WindowMiss, "no small-denominator rational near " + num(r));
  out.tau = *snapped;
  out.snap_residual = std::abs(r - out.tau.to_double());
  out.chi = orbifold_euler_char(5);
  if (abs(out.tau).to_double() > abs(out.chi).to_double())
    fail(ErrorKind::WindowMiss, "toledo invariant " + out.tau.str() + " exceeds |chi|");
  return out;
}

Rational euler_cross_check(const Pentagon& pent, const std::optional<Vec3>& x1,
                           const Tolerance& tol) {
  const ToledoResult t = toledo(pent, x1, tol);
  return euler_from_toledo(t.tau, t.chi);
}

Spine bisector_spine(const Vec3& qa, const Vec3& qb, const HermitianSpace& s,
                     const Tolerance& tol) {
  if (sign(qa, s, tol) != Sign::Positive || sign(qb, s, tol) != Sign::Positive ||
      !(tance(qa, qb, s, tol) > 1.0 + tol.eq_tol))
    fail(ErrorKind::NotUltraparallel, "slices are not ultraparallel");
  Spine sp;
  sp.f = normalized(orthogonal_complement_point(qa, qb, s, tol), s);
  sp.ca = normalized(orthogonal_complement_point(qa, sp.f, s, tol), s);
  sp.cb = normalized(orthogonal_complement_point(qb, sp.f, s, tol), s);
  const cplx ph = s.inner(sp.ca, sp.cb);
  sp.cb = (-ph / std::abs(ph)) * sp.cb;
  sp.mid = sp.ca + sp.cb;
  return sp;
}

Vec3 middle_slice_polar(const Vec3& qa, const Vec3& qb, const HermitianSpace& s,
                        const Tolerance& tol) {
  const Spine sp = bisector_spine(qa, qb, s, tol);
  return orthogonal_complement_point(sp.mid, sp.f, s, tol);
}

CyclicOrder cyclic_order(const Vec3& a, const Vec3& b, const Vec3& c, const HermitianSpace& s,
                         const std::optional<Vec3>& polar, const Tolerance& tol) {
  for (const Vec3* z : {&a, &b, &c}) {
    if (!is_isotropic(*z, s, tol)) fail(ErrorKind::NotOnBoundary, "point is not isotropic");
    if (polar && std::abs(s.inner(*z, *polar)) > tol.eq_tol * s.form_norm(*z) * s.form_norm(*polar))
      fail(ErrorKind::NotOnBoundary, "point is not on the slice");
  }
  const cplx prod = triple_product(a, b, c, s);
  if (std::abs(prod.real()) > tol.eq_tol * std::max(1.0, std::abs(prod)))
    fail(ErrorKind::RealPartNonzero, "cyclic product is not imaginary");
  return {prod.imag() < 0.0 ? Orientation::Cyclic : Orientation::Anticyclic, prod};
}

double motion_test(const Mat3& iso, const Vec3& z, const HermitianSpace& s) {
  const Vec3 z1 = iso * z;
  const Vec3 z2 = iso * z1;
  return triple_product(z, z1, z2, s).imag();
}

BoundaryFixedPoint holonomy_boundary_fixed_point(const Vec3& c_polar, const Mat3& iso,
                                                 const HermitianSpace& s,
                                                 const std::optional<Vec3>& ref,
                                                 const Tolerance& tol) {
  if (!projectively_equal(iso * c_polar, c_polar, s, tol))
    fail(ErrorKind::NotInvariant, "isometry does not preserve the slice");
  EigenSystem es;
  try {
    es = eigen_decompose(iso, tol);
  } catch (const GeometryError&) {
    fail(ErrorKind::NotHyperbolicOnSlice, "repeated eigenvalues");
  }
  // The eigenvector closest to the polar belongs to the slice's normal direction.
  int k = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double closeness = std::abs(s.inner(es.vectors[i], c_polar));
    const double scale = s.form_norm(es.vectors[i]) * s.form_norm(c_polar);
    if (closeness / scale > best) {
      best = closeness / scale;
      k = i;
    }
  }
  int a = (k + 1) % 3, b = (k + 2) % 3;
  if (!is_isotropic(es.vectors[a], s, tol) || !is_isotropic(es.vectors[b], s, tol) ||
      std::abs(std::abs(es.values[a]) - std::abs(es.values[b])) <= tol.eq_tol)
    fail(ErrorKind::NotHyperbolicOnSlice, "no pair of boundary fixed points");
  if (std::abs(es.values[b]) < std::abs(es.values[a])) std::swap(a, b);
  BoundaryFixedPoint out{es.vectors[a], es.values[a]};
  if (ref) out.z = normalized_against(out.z, *ref, s);
  return out;
}

Vec3 meridional_endpoint(const Vec3& qa, const Vec3& qb, const Vec3& slice_polar, const Vec3& xi,
                         const HermitianSpace& s, const Tolerance& tol) {
  if (!is_isotropic(xi, s, tol)) fail(ErrorKind::InvalidInput, "meridian needs a boundary point");
  const Spine sp = bisector_spine(qa, qb, s, tol);

  // Spine vertex of the slice, on the same side of the complex spine as mid.
  Vec3 c = orthogonal_complement_point(slice_polar, sp.f, s, tol);
  const cplx h = s.inner(c, sp.mid);
  if (std::abs(h) <= tol.eq_tol * s.form_norm(c) * s.form_norm(sp.mid))
    fail(ErrorKind::SideAmbiguous, "slice vertex is orthogonal to the spine midpoint");
  c = normalized((-std::conj(h) / std::abs(h)) * c, s);

  const cplx g = s.inner(xi, sp.f);  // <f,f> = 1
  const double scale = s.form_norm(xi);
  if (std::abs(g) <= tol.eq_tol * scale) return xi;  // xi is a spine vertex
  const Vec3 u = xi - g * sp.f;
  const cplx hu = s.inner(u, sp.mid);
  if (std::abs(hu) <= tol.eq_tol * scale * s.form_norm(sp.mid))
    fail(ErrorKind::SideAmbiguous, "boundary point has no definite side");
  const cplx mu = -std::conj(hu) / std::abs(hu);
  const cplx e = mu * g / std::abs(mu * g);
  return c + e * sp.f;
}

double EulerCertificate::test(const std::string& name) const {
  for (const auto& [n, v] : direction_tests)
    if (n == name) return v;
  throw std::out_of_range(name);
}

static double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

EulerCertificate euler_certificate(const Pentagon& pent, const EulerOptions& opt,
                                   const Tolerance& tol) {
  require_all_ok(quadrangle_report(pent, opt.witness, tol));
  const QuadrangleData d = polar_sequence(pent, opt.witness, tol);
  const auto& s = d.space;
  const auto& q = d.q;
  const auto& r = d.r;

  EulerCertificate cert;
  cert.m = middle_slice_polar(q[0], q[2], s, tol);
  for (int i = 0; i < 4; ++i) cert.mi[i] = middle_slice_polar(q[i], q[(i + 1) % 4], s, tol);
  const auto& m1 = cert.mi[0];
  const auto& m2 = cert.mi[1];
  const auto& m3 = cert.mi[2];
  const auto& m4 = cert.mi[3];
  const Mat3 rm = reflection(cert.m, s, tol);
  const Mat3 rm1 = reflection(m1, s, tol), rm2 = reflection(m2, s, tol);
  const Mat3 rm3 = reflection(m3, s, tol), rm4 = reflection(m4, s, tol);

  Vec3 za, zb;
  if (opt.samples) {
    za = opt.samples->first;
    zb = opt.samples->second;
  } else {
    const Vec3 u = c1_tangent(d);
    za = d.witness + u;
    zb = d.witness - cplx(0, 1) * u;
  }
  for (const Vec3* z : {&za, &zb})
    if (!is_isotropic(*z, s, tol) ||
        std::abs(s.inner(*z, q[0])) > tol.eq_tol * s.form_norm(*z) * s.form_norm(q[0]))
      fail(ErrorKind::NotOnBoundary, "sample is not on the boundary of C1");

  const Mat3 a = rm * r[2] * r[1];
  const Mat3 b = r[4] * r[3] * rm;
  auto& dt = cert.direction_tests;
  dt.emplace_back("right.za", motion_test(a, za, s));
  dt.emplace_back("left.za", motion_test(b, za, s));
  dt.emplace_back("right.zb", motion_test(a, zb, s));
  dt.emplace_back("left.zb", motion_test(b, zb, s));

  auto& gates = cert.gates;
  auto gate = [&](const std::string& name, bool ok) {
    gates.emplace_back(name, ok);
    if (!ok && cert.failed_gate.empty()) cert.failed_gate = name;
    return ok;
  };
  gate("hyperbolic", sgn(cert.test("right.za")) * sgn(cert.test("right.zb")) < 0.0);
  gate("opposite", sgn(cert.test("right.za")) * sgn(cert.test("left.za")) < 0.0 &&
                       sgn(cert.test("right.zb")) * sgn(cert.test("left.zb")) < 0.0);
  if (!cert.failed_gate.empty()) return cert;

  const BoundaryFixedPoint fp = holonomy_boundary_fixed_point(q[0], a, s, d.witness, tol);
  const Vec3 z1 = fp.z;
  cert.z1 = z1;
  cert.z1_eigenvalue = fp.eigenvalue;
  const Vec3 bz1 = b * z1;
  cert.z1_eigenvalue_left = s.inner(bz1, d.witness) / s.inner(z1, d.witness);

  auto mer = [&](const Vec3& qa, const Vec3& qb, const Vec3& sp, const Vec3& xi) {
    return meridional_endpoint(qa, qb, sp, xi, s, tol);
  };
  auto mismatch = [&](const Vec3& u, const Vec3& v) {
    const Vec3 un = normalized_against(u, d.witness, s);
    const Vec3 vn = normalized_against(v, d.witness, s);
    return norm_inf(un - vn) / std::max(1.0, norm_inf(vn));
  };

  // Chain through the right-hand segments.
  const Vec3 z4 = r[1] * z1;
  const Vec3 z5 = mer(q[1], q[2], m2, z4);
  const Vec3 z6 = r[2] * z5;
  const Vec3 z7 = mer(q[1], q[2], q[2], z6);
  const Vec3 z8 = mer(q[2], q[3], m3, z7);
  const Vec3 z9 = r[3] * z8;
  const Vec3 z10 = r[3] * z7;

  const Vec3 s2 = rm1 * z1;
  const Vec3 s3 = mer(q[1], q[2], m2, s2);
  const Vec3 t2 = rm4 * z1;
  const Vec3 t3 = mer(q[3], q[2], m3, t2);
  const Vec3 t5 = rm * rm3 * t2;

  auto& ck = cert.checks;
  ck.emplace_back("right.closure", mismatch(rm * z7, z1));
  ck.emplace_back("left.closure", mismatch(r[4] * z10, z1));
  const Mat3 h1 = rm * rm2 * rm1;
  const Mat3 h2 = rm4 * rm3 * rm;

  dt.emplace_back("right.holonomy", motion_test(h1, z1, s));
  dt.emplace_back("right.placement", triple_product(z5, s3, z6, s).imag());
  dt.emplace_back("left.holonomy", motion_test(h2, t5, s));
  dt.emplace_back("left.placement", triple_product(t3, z8, z9, s).imag());

  const double closure_tol = 1e-6;
  bool closed = true;
  for (const auto& [n, v] : ck) closed = closed && v < closure_tol;
  gate("closure", closed);
  gate("right.holonomy", cert.test("right.holonomy") > 0.0);
  gate("right.placement", cert.test("right.placement") < 0.0);
  gate("left.holonomy", cert.test("left.holonomy") > 0.0);
  gate("left.placement", cert.test("left.placement") > 0.0);

  const Rational half(1, 2);
  auto signed_half = [&](double v) { return v > 0.0 ? half : Rational(0) - half; };
  cert.segment_signs = {Rational(0) - signed_half(cert.test("right.holonomy")),
                        Rational(0) - signed_half(cert.test("right.placement")),
                        Rational(0) - signed_half(cert.test("left.holonomy")),
                        signed_half(cert.test("left.placement"))};
  if (cert.failed_gate.empty()) {
    Rational sum;
    for (const auto& v : cert.segment_signs) sum = sum + v;
    cert.e = Rational(0) - sum;
  }
  return cert;
}

EulerCertificate euler_number(const Pentagon& pent, const EulerOptions& opt,
                              const Tolerance& tol) {
  EulerCertificate cert = euler_certificate(pent, opt, tol);
  if (!cert.failed_gate.empty()) fail(ErrorKind::PatternMismatch, "gate " + cert.failed_gate);
  return cert;
}

}  // namespace pu21
