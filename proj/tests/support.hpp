#pragma once

// Shared test helpers: fixture loading and small reference implementations that do
// not go through the library's own linear algebra.

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <random>

#include "pu21/errors.hpp"
#include "pu21/io.hpp"
#include "pu21/isometry.hpp"

namespace testing_support {

using namespace pu21;
using pu21::cplx;
using pu21::Mat3;
using pu21::Vec3;

// Kind of the GeometryError thrown by f, or nothing when f returns normally.
inline std::optional<pu21::ErrorKind> error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const pu21::GeometryError& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline pu21::Json fixture_json() { return pu21::load_json(PU21_FIXTURE); }
inline pu21::Pentagon fixture() { return pu21::pentagon_from_json(fixture_json()); }

inline Vec3 fixture_vec(const std::string& group, const std::string& key) {
  const auto j = fixture_json();
  return pu21::vec_from_json(group.empty() ? j[key] : j[group][key]);
}

// Reference form: sum_ij x_i g_ij conj(y_j).
inline cplx ref_inner(const Mat3& g, const Vec3& x, const Vec3& y) {
  cplx acc = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += x[i] * g[i][j] * std::conj(y[j]);
  return acc;
}

inline Vec3 ref_reflect(const Mat3& g, const Vec3& p, const Vec3& x) {
  const cplx k = 2.0 * ref_inner(g, x, p) / ref_inner(g, p, p);
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = k * p[i] - x[i];
  return out;
}

inline double ref_tance(const Mat3& g, const Vec3& p, const Vec3& q) {
  return (ref_inner(g, p, q) * ref_inner(g, q, p) / (ref_inner(g, p, p) * ref_inner(g, q, q))).real();
}

// Matrix of x -> R^{p_k} ... R^{p_1} x, built column by column.
template <class Points>
Mat3 ref_product(const Mat3& g, const Points& ps) {
  Mat3 m{};
  for (int c = 0; c < 3; ++c) {
    Vec3 e{};
    e[c] = 1.0;
    for (const auto& p : ps) e = ref_reflect(g, p, e);
    for (int r = 0; r < 3; ++r) m[r][c] = e[r];
  }
  return m;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
  return m;
}

inline Vec3 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v;
  for (auto& z : v) z = cplx(n(rng), n(rng));
  return v;
}

// Random point with |unit_square| > min_square and the requested sign (0 for either).
inline Vec3 random_point(std::mt19937_64& rng, const pu21::HermitianSpace& s, int want_sign,
                         double min_square = 0.1) {
  for (;;) {
    const Vec3 v = random_vec(rng);
    const double u = pu21::unit_square(v, s);
    if (std::abs(u) > min_square && (want_sign == 0 || u * want_sign > 0)) return v;
  }
}

// Product of random reflections in negative points: a random isometry.
inline Mat3 random_isometry(std::mt19937_64& rng, const pu21::HermitianSpace& s, int n = 4) {
  Mat3 m = pu21::identity();
  for (int k = 0; k < n; ++k) m = pu21::reflection(random_point(rng, s, -1), s) * m;
  return m;
}

// Random isometry whose condition number stays below max_cond, so that
// conjugated residuals remain comparable to the originals.
inline Mat3 tame_isometry(std::mt19937_64& rng, const pu21::HermitianSpace& s, double max_cond = 50.0) {
  for (;;) {
    const Mat3 m = random_isometry(rng, s, 2);
    if (pu21::norm_inf(m) * pu21::norm_inf(pu21::inverse(m)) < max_cond) return m;
  }
}

}  // namespace testing_support
