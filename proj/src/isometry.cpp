#include "pu21/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pu21/errors.hpp"

namespace pu21 {

double form_residual(const Mat3& m, const HermitianSpace& s) {
  return norm_inf(transpose(m) * s.gram() * conj(m) - s.gram());
}

bool is_isometry(const Mat3& m, const HermitianSpace& s, const Tolerance& tol) {
  return std::abs(det(m) - 1.0) < tol.eq_tol && form_residual(m, s) < tol.eq_tol;
}

Mat3 renormalize_su21(const Mat3& m) {
  const cplx d = det(m);
  const double r = std::cbrt(std::abs(d));
  const double a = std::arg(d) / 3.0;
  // the three candidates differ by 2pi/3; the principal one already has |arg| <= pi/3
  return (1.0 / std::polar(r, a)) * m;
}

Mat3 reflection(const Vec3& p, const HermitianSpace& s, const Tolerance& tol) {
  if (is_isotropic(p, s, tol)) fail(ErrorKind::IsotropicArgument, "reflection center is isotropic");
  const double pp = s.inner(p, p).real();
  const Vec3 cov = s.gram() * conj(p);  // <x,p> = x . cov
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = 2.0 * p[i] * cov[j] / pp - (i == j ? 1.0 : 0.0);
  return r;
}

double deltoid_value(cplx z) {
  const double n = std::norm(z);
  return n * n - 8.0 * (z * z * z).real() + 18.0 * n - 27.0;
}

const char* to_string(IsometryClass::Tag t) {
  switch (t) {
    case IsometryClass::Tag::RegularElliptic: return "RegularElliptic";
    case IsometryClass::Tag::Loxodromic: return "Loxodromic";
    case IsometryClass::Tag::Boundary: return "Boundary";
  }
  return "Unknown";
}

IsometryClass classify(const Mat3& m, const Tolerance& tol) {
  const cplx tr = trace(m);
  const double f = deltoid_value(tr);
  auto tag = IsometryClass::Tag::Boundary;
  if (f < -tol.eq_tol) tag = IsometryClass::Tag::RegularElliptic;
  if (f > tol.eq_tol) tag = IsometryClass::Tag::Loxodromic;
  return {tag, tr, f};
}

std::array<cplx, 3> cubic_roots(cplx a, cplx b, cplx c) {
  // x = y + a/3 gives y^3 + p y + q = 0
  const cplx p = b - a * a / 3.0;
  const cplx q = -2.0 * a * a * a / 27.0 + a * b / 3.0 - c;
  const cplx disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  cplx u3 = -q / 2.0 + disc;
  if (std::abs(-q / 2.0 - disc) > std::abs(u3)) u3 = -q / 2.0 - disc;
  const cplx u = std::pow(u3, 1.0 / 3.0);
  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::array<cplx, 3> roots{};
  cplx wk = 1.0;
  for (int k = 0; k < 3; ++k) {
    cplx y = 0.0;
    if (std::abs(u) > 0.0) y = wk * u - p / (3.0 * wk * u);
    roots[k] = y + a / 3.0;
    wk *= w;
  }
  for (auto& x : roots) {
    const cplx f = ((x - a) * x + b) * x - c;
    const cplx df = (3.0 * x - 2.0 * a) * x + b;
    if (std::abs(df) > 0.0) x -= f / df;
  }
  return roots;
}

Vec3 eigenvector(const Mat3& m, cplx lambda) {
  Mat3 b = m - lambda * identity();
  Vec3 best{};
  double best_n = -1.0;
  for (int i = 0; i < 3; ++i) {
    for (int k = i + 1; k < 3; ++k) {
      const Vec3 x = cross(b[i], b[k]);
      const double n = norm2(x);
      if (n > best_n) {
        best_n = n;
        best = x;
      }
    }
  }
  if (!(best_n > 0.0)) best = {1.0, 1.0, 1.0};
  Vec3 x = (1.0 / norm2(best)) * best;
  const cplx shift = lambda + 1e-11 * (1.0 + std::abs(lambda));
  const Mat3 bs = m - shift * identity();
  for (int it = 0; it < 2; ++it) {
    Vec3 y{};
    if (!solve(bs, x, y)) break;
    const double n = norm2(y);
    if (!(n > 0.0) || !std::isfinite(n)) break;
    x = (1.0 / n) * y;
  }
  return x;
}

EigenSystem eigen_decompose(const Mat3& m, const Tolerance& tol) {
  const cplx a = trace(m);
  const cplx b = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
                 m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const cplx c = det(m);
  EigenSystem e;
  e.values = cubic_roots(a, b, c);
  double scale = 1.0;
  for (const auto& v : e.values) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k)
      if (std::abs(e.values[i] - e.values[k]) < tol.eq_tol * scale)
        fail(ErrorKind::EigenFailure, "eigenvalues are not separated");
  for (int i = 0; i < 3; ++i) e.vectors[i] = eigenvector(m, e.values[i]);
  return e;
}

LoxodromicFrame loxodromic_frame(const Mat3& m, const HermitianSpace& s, const Tolerance& tol) {
  if (classify(m, tol).tag != IsometryClass::Tag::Loxodromic)
    fail(ErrorKind::NotLoxodromic, "trace lies on or inside the deltoid");
  EigenSystem e = eigen_decompose(m, tol);
  std::array<int, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(),
            [&](int i, int k) { return std::abs(e.values[i]) > std::abs(e.values[k]); });
  LoxodromicFrame f{e.vectors[idx[0]], e.vectors[idx[2]], e.vectors[idx[1]],
                    e.values[idx[0]], e.values[idx[2]], e.values[idx[1]]};
  if (!is_isotropic(f.v1, s, tol) || !is_isotropic(f.v2, s, tol) ||
      sign(f.c, s, tol) != Sign::Positive)
    fail(ErrorKind::EigenFailure, "eigenvectors do not have the loxodromic signs");
  return f;
}

TangentPair tangent_pair(const Vec3& p, const Vec3& t_dir, const HermitianSpace& s,
                         const Tolerance& tol) {
  if (is_isotropic(p, s, tol)) fail(ErrorKind::IsotropicArgument, "base point is isotropic");
  const double pp = s.inner(p, p).real();
  const Vec3 t = t_dir - (s.inner(t_dir, p) / pp) * p;
  const Vec3 cov_p = s.gram() * conj(p);
  const Vec3 cov_t = s.gram() * conj(t);
  TangentPair out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.t[i][j] = t[i] * cov_p[j] / pp;
      out.t_star[i][j] = p[i] * cov_t[j] / pp;
    }
  }
  return out;
}

double reflection_derivative_residual(const Vec3& p, const Vec3& t_dir, double h,
                                      const HermitianSpace& s, const Tolerance& tol) {
  if (is_isotropic(p, s, tol)) fail(ErrorKind::IsotropicArgument, "base point is isotropic");
  const double pp = s.inner(p, p).real();
  const Vec3 t = t_dir - (s.inner(t_dir, p) / pp) * p;
  const TangentPair tp = tangent_pair(p, t, s, tol);
  const Mat3 fd = (1.0 / (2.0 * h)) * (reflection(p + cplx(h) * t, s, tol) -
                                       reflection(p - cplx(h) * t, s, tol));
  return norm_inf(fd - 2.0 * (tp.t + tp.t_star));
}

}  // namespace pu21
