#pragma once

#include <array>
#include <complex>

namespace pu21 {

using cplx = std::complex<double>;
using Vec3 = std::array<cplx, 3>;
using Mat3 = std::array<std::array<cplx, 3>, 3>;

Mat3 identity();
Mat3 zero_matrix();
Mat3 diag(cplx a, cplx b, cplx c);

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(cplx s, const Vec3& v);
Vec3 operator*(const Mat3& m, const Vec3& v);

Mat3 operator+(const Mat3& a, const Mat3& b);
Mat3 operator-(const Mat3& a, const Mat3& b);
Mat3 operator*(cplx s, const Mat3& m);
Mat3 operator*(const Mat3& a, const Mat3& b);

Mat3 transpose(const Mat3& m);
Mat3 adjoint(const Mat3& m);  // conjugate transpose
Mat3 conj(const Mat3& m);
Vec3 conj(const Vec3& v);

cplx trace(const Mat3& m);
cplx det(const Mat3& m);
Mat3 inverse(const Mat3& m);  // throws std::domain_error when singular

// Columns of a matrix
Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
Vec3 column(const Mat3& m, int j);

// Plain bilinear cross product (no conjugation).
Vec3 cross(const Vec3& a, const Vec3& b);

double norm2(const Vec3& v);    // Euclidean
double norm_inf(const Vec3& v);
double norm_inf(const Mat3& m); // max entry modulus

// Solve m x = b by Gaussian elimination with partial pivoting.
// Returns false when a pivot vanishes exactly.
bool solve(const Mat3& m, const Vec3& b, Vec3& x);

}  // namespace pu21
