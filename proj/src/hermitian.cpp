#include "pu21/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pu21/errors.hpp"

namespace pu21 {

void Tolerance::validate() const {
  if (!(eq_tol > 0.0) || !(residual_tol > 0.0) || !(iso_tol > 0.0))
    fail(ErrorKind::InvalidInput, "tolerances must be strictly positive");
}

// Cyclic Jacobi. Each off-diagonal entry is first made real by a diagonal phase,
// then annihilated by a real plane rotation.
HermitianEigen hermitian_eigen(const Mat3& h) {
  Mat3 a = h;
  Mat3 v = identity();
  const double scale = std::max(norm_inf(h), 1e-300);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off < 1e-17 * scale) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double b = std::abs(a[p][q]);
        if (b < 1e-300) continue;
        const cplx phase = a[p][q] / b;
        const double app = a[p][p].real();
        const double aqq = a[q][q].real();
        const double theta = 0.5 * std::atan2(2.0 * b, app - aqq);
        const double c = std::cos(theta), s = std::sin(theta);
        Mat3 j = identity();
        // diag phase on q, then rotation with columns (c, s) and (-s, c)
        j[p][p] = c;
        j[p][q] = -s;
        j[q][p] = s * std::conj(phase);
        j[q][q] = c * std::conj(phase);
        a = adjoint(j) * a * j;
        v = v * j;
        a[p][q] = a[q][p] = 0.0;
      }
    }
  }
  HermitianEigen out;
  std::array<int, 3> idx{0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int i, int k) { return a[i][i].real() < a[k][k].real(); });
  for (int k = 0; k < 3; ++k) {
    out.values[k] = a[idx[k]][idx[k]].real();
    for (int r = 0; r < 3; ++r) out.vectors[r][k] = v[r][idx[k]];
  }
  return out;
}

HermitianSpace::HermitianSpace(const Mat3& gram) : gram_(gram) {
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (gram[i][k] != std::conj(gram[k][i]))
        fail(ErrorKind::SignatureError, "Gram matrix is not Hermitian");
  // <x,x> = x^* G^T x
  eig_ = hermitian_eigen(transpose(gram));
  const double scale = std::max(norm_inf(gram), 1e-300);
  const auto& ev = eig_.values;
  if (!(ev[0] < -1e-12 * scale && ev[1] > 1e-12 * scale && ev[2] > 1e-12 * scale))
    fail(ErrorKind::SignatureError, "signature is not (-,+,+)");
}

HermitianSpace HermitianSpace::canonical() { return HermitianSpace(diag(-1.0, 1.0, 1.0)); }

cplx HermitianSpace::inner(const Vec3& x, const Vec3& y) const {
  cplx r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r += x[i] * gram_[i][k] * std::conj(y[k]);
  return r;
}

double HermitianSpace::form_norm(const Vec3& x) const {
  double s = 0.0;
  for (int k = 0; k < 3; ++k) {
    cplx w = 0.0;
    for (int r = 0; r < 3; ++r) w += std::conj(eig_.vectors[r][k]) * x[r];
    s += std::abs(eig_.values[k]) * std::norm(w);
  }
  return std::sqrt(s);
}

cplx inner(const Vec3& x, const Vec3& y, const HermitianSpace& s) { return s.inner(x, y); }

double unit_square(const Vec3& x, const HermitianSpace& s) {
  const double n = s.form_norm(x);
  if (n == 0.0) fail(ErrorKind::InvalidInput, "zero vector is not a projective point");
  return s.inner(x, x).real() / (n * n);
}

Vec3 unit_scaled(const Vec3& x, const HermitianSpace& s) {
  const double n = s.form_norm(x);
  if (n == 0.0) fail(ErrorKind::InvalidInput, "zero vector is not a projective point");
  return (1.0 / n) * x;
}

Sign sign(const Vec3& p, const HermitianSpace& s, const Tolerance& tol) {
  const double u = unit_square(p, s);
  if (u < -tol.iso_tol) return Sign::Negative;
  if (u > tol.iso_tol) return Sign::Positive;
  return Sign::Isotropic;
}

bool is_isotropic(const Vec3& p, const HermitianSpace& s, const Tolerance& tol) {
  return sign(p, s, tol) == Sign::Isotropic;
}

double tance(const Vec3& p, const Vec3& q, const HermitianSpace& s, const Tolerance& tol) {
  if (is_isotropic(p, s, tol) || is_isotropic(q, s, tol))
    fail(ErrorKind::IsotropicArgument, "tance of an isotropic point");
  const cplx pq = s.inner(p, q);
  return std::norm(pq) / (s.inner(p, p).real() * s.inner(q, q).real());
}

Vec3 orthogonal_complement_point(const Vec3& x, const Vec3& y, const HermitianSpace& s,
                                 const Tolerance& tol) {
  // <z,x> = z . (G conj x), so z is the bilinear cross product of the two covectors.
  const Vec3 a = s.gram() * conj(x);
  const Vec3 b = s.gram() * conj(y);
  const Vec3 z = cross(a, b);
  if (norm2(z) <= tol.eq_tol * norm2(a) * norm2(b))
    fail(ErrorKind::DegenerateSpan, "points are projectively equal");
  return z;
}

LineRelation line_relation(const Vec3& p, const Vec3& q, const HermitianSpace& s,
                           const Tolerance& tol) {
  if (sign(p, s, tol) != Sign::Positive || sign(q, s, tol) != Sign::Positive)
    fail(ErrorKind::NotPolarPoints, "line_relation needs two positive points");
  const double t = tance(p, q, s, tol);
  if (t > 1.0 + tol.eq_tol) return {LineRelation::Kind::Ultraparallel, std::acosh(std::sqrt(t))};
  if (t < 1.0 - tol.eq_tol)
    return {LineRelation::Kind::Concurrent, std::acos(std::sqrt(std::max(t, 0.0)))};
  return {LineRelation::Kind::Asymptotic, 0.0};
}

bool projectively_equal(const Vec3& p, const Vec3& q, const HermitianSpace& s,
                        const Tolerance& tol) {
  // Proportionality, not tance: distinct positive points can have tance 1.
  (void)s;
  cplx ov = 0.0;
  for (int i = 0; i < 3; ++i) ov += std::conj(p[i]) * q[i];
  const double overlap = std::norm(ov) / (std::pow(norm2(p), 2) * std::pow(norm2(q), 2));
  return overlap > 1.0 - tol.eq_tol;
}

Vec3 normalized(const Vec3& x, const HermitianSpace& s) {
  const double n = s.inner(x, x).real();
  if (n == 0.0) fail(ErrorKind::IsotropicArgument, "cannot normalize an isotropic vector");
  return (1.0 / std::sqrt(std::abs(n))) * x;
}

Vec3 normalized_against(const Vec3& x, const Vec3& ref, const HermitianSpace& s) {
  const cplx h = s.inner(x, ref);
  if (std::abs(h) == 0.0) fail(ErrorKind::DegenerateSpan, "reference is orthogonal");
  return (-1.0 / h) * x;
}

cplx triple_product(const Vec3& a, const Vec3& b, const Vec3& c, const HermitianSpace& s) {
  return s.inner(a, b) * s.inner(b, c) * s.inner(c, a);
}

}  // namespace pu21
