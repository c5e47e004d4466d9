#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pu21/pentagon.hpp"

namespace pu21 {

using NamedValues = std::vector<std::pair<std::string, double>>;

struct QuadrangleData {
  HermitianSpace space;
  std::array<Vec3, 4> q;  // polars of the four vertex slices, q1 = p1, q_i = R_i q_{i-1}
  Vec3 witness;           // point of C1 with <x,x> = -1
  NamedValues tances;     // ta(q1,q2), ta(q2,q3), ta(q3,q4), ta(q4,q1), ta(q1,q3), ta(q4,q2)
  cplx eps;               // eta1 / |eta1| for (q1,q2,q3)
  cplx chi;               // eta2 / |eta2| for (q1,q3,q4)
  std::array<Mat3, 5> r;  // R^{p1} ... R^{p5}
};

// Closest point of C1 to p3, scaled to <x,x> = -1 with <x,p3> real negative.
Vec3 default_witness(const Pentagon& pent, const Tolerance& tol = {});

QuadrangleData polar_sequence(const Pentagon& pent, const std::optional<Vec3>& witness = {},
                              const Tolerance& tol = {});

// Unit positive vector of C1 orthogonal to the witness; the phase makes its
// largest coordinate real positive.
Vec3 c1_tangent(const QuadrangleData& d);
// witness + r e^{i phi} u, scaled to <x,x> = -1; needs 0 <= r < 1.
Vec3 point_on_c1(const QuadrangleData& d, double r, double phi);

// Im(<a,x><x,b>/<a,b>)
double bisector_side(const Vec3& x, const Vec3& a, const Vec3& b, const HermitianSpace& s,
                     const Tolerance& tol = {});

NamedValues check_q1(const QuadrangleData& d);
NamedValues check_q2(const QuadrangleData& d, const Tolerance& tol = {});
NamedValues check_q3(const QuadrangleData& d, const Tolerance& tol = {});
NamedValues check_q4(const QuadrangleData& d, const Tolerance& tol = {});

std::array<double, 4> interior_angles(const QuadrangleData& d, const Vec3& x1,
                                      const Tolerance& tol = {});

enum class CheckStatus { Pass, Fail, NotEvaluated };
const char* to_string(CheckStatus s);

struct QuadrangleReport {
  CheckStatus q1 = CheckStatus::NotEvaluated;
  CheckStatus q2 = CheckStatus::NotEvaluated;
  CheckStatus q3 = CheckStatus::NotEvaluated;
  CheckStatus q4 = CheckStatus::NotEvaluated;
  bool all_ok = false;
  NamedValues slacks;  // every strict inequality, positive when satisfied
  NamedValues values;  // supporting numbers (tances, eps, chi, raw differences)
  std::optional<std::array<double, 4>> angles;
  std::string first_failure;  // name of the first failing slack, empty when all pass

  double slack(const std::string& name) const;  // throws std::out_of_range
  double value(const std::string& name) const;
};

QuadrangleReport quadrangle_report(const Pentagon& pent, const std::optional<Vec3>& witness = {},
                                   const Tolerance& tol = {});

// Fixed slack column order used by the CSV writer.
const std::vector<std::string>& slack_names();

}  // namespace pu21
