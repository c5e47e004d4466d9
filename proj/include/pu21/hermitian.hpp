#pragma once

#include <array>

#include "pu21/linalg.hpp"

namespace pu21 {

struct Tolerance {
  double eq_tol = 1e-9;
  double residual_tol = 1e-10;
  double iso_tol = 1e-8;

  // Throws InvalidInput unless every field is strictly positive.
  void validate() const;
};

// Hermitian eigen-decomposition of a 3x3 matrix: h = vectors * diag(values) * vectors^*.
// Values ascending.
struct HermitianEigen {
  std::array<double, 3> values{};
  Mat3 vectors{};
};
HermitianEigen hermitian_eigen(const Mat3& h);

// <x,y> = x^T G conj(y) for a Gram matrix G of signature (-,+,+).
class HermitianSpace {
 public:
  // Throws SignatureError when the matrix is not Hermitian or has the wrong signature.
  explicit HermitianSpace(const Mat3& gram);
  static HermitianSpace canonical();  // diag(-1, 1, 1)

  const Mat3& gram() const { return gram_; }
  cplx inner(const Vec3& x, const Vec3& y) const;

  // Euclidean norm of x in a fixed basis that diagonalizes the form to diag(+-1).
  double form_norm(const Vec3& x) const;
  const std::array<double, 3>& eigenvalues() const { return eig_.values; }

 private:
  Mat3 gram_;
  HermitianEigen eig_;
};

enum class Sign { Negative = -1, Isotropic = 0, Positive = 1 };

cplx inner(const Vec3& x, const Vec3& y, const HermitianSpace& s);

// <x,x> divided by the squared form norm; lies in [-1, 1].
double unit_square(const Vec3& x, const HermitianSpace& s);
Vec3 unit_scaled(const Vec3& x, const HermitianSpace& s);

Sign sign(const Vec3& p, const HermitianSpace& s, const Tolerance& tol = {});
bool is_isotropic(const Vec3& p, const HermitianSpace& s, const Tolerance& tol = {});

double tance(const Vec3& p, const Vec3& q, const HermitianSpace& s, const Tolerance& tol = {});

// z with <z,x> = <z,y> = 0.
Vec3 orthogonal_complement_point(const Vec3& x, const Vec3& y, const HermitianSpace& s,
                                 const Tolerance& tol = {});

struct LineRelation {
  enum class Kind { Ultraparallel, Asymptotic, Concurrent } kind;
  double value = 0.0;  // distance, 0, or angle
};
LineRelation line_relation(const Vec3& p, const Vec3& q, const HermitianSpace& s,
                           const Tolerance& tol = {});

// Representative-free equality of projective points.
bool projectively_equal(const Vec3& p, const Vec3& q, const HermitianSpace& s,
                        const Tolerance& tol = {});

// Scale x so that <x,x> = -1 (negative) or +1 (positive).
Vec3 normalized(const Vec3& x, const HermitianSpace& s);

// Scale x so that <x, ref> = -1.
Vec3 normalized_against(const Vec3& x, const Vec3& ref, const HermitianSpace& s);

// <a,b><b,c><c,a>
cplx triple_product(const Vec3& a, const Vec3& b, const Vec3& c, const HermitianSpace& s);

}  // namespace pu21
