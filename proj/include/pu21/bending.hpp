#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pu21/quadrangle.hpp"
#include "pu21/triple.hpp"

namespace pu21 {

// Bending one-parameter subgroup of R^{p_{i+1}} R^{p_i} (indices mod 5, i in 1..5).
struct BendingPair {
  int i = 1;
  Vec3 c, v1, v2;    // <c,c> = 1, <v1,v2> = 1
  Mat3 basis_change; // columns c, v1, v2
  Mat3 basis_inverse;
};

BendingPair make_bending_pair(const Pentagon& pent, int i, const Tolerance& tol = {});

Mat3 bending(const BendingPair& pair, double theta);

Pentagon bend_pentagon(const Pentagon& pent, int i, double theta, const Tolerance& tol = {});

// Surface coordinates of the sub-triple (p1, p2, p3).
SurfaceCoords pentagon_coords(const Pentagon& pent, const Tolerance& tol = {});

struct BendScanRow {
  double theta = 0.0;
  std::optional<SurfaceCoords> coords;
  std::optional<QuadrangleReport> report;
  std::string error;  // set when the row could not be evaluated

  bool all_ok() const { return report && report->all_ok; }
};

// Rows at theta = k dtheta, k = -n_neg..n_pos, each bent from the original pentagon.
std::vector<BendScanRow> bend_scan(const Pentagon& pent, int i, double dtheta, int n_pos,
                                   int n_neg, const Tolerance& tol = {});

// First theta on each side of zero whose row is not all_ok.
struct FailureOnsets {
  std::optional<double> positive;
  std::optional<double> negative;
};
FailureOnsets failure_onsets(const std::vector<BendScanRow>& rows);

using WalkStep = std::pair<int, double>;  // (pair index, theta)
Pentagon composed_walk(const Pentagon& pent, const std::vector<WalkStep>& steps,
                       const Tolerance& tol = {});

// A walk pair1 -> pair2 -> pair1 that comes back to the starting surface
// coordinates while the quadrangle verdict differs from the start.
struct ClosedPath {
  std::vector<WalkStep> steps;
  SurfaceCoords start, end;
  double coord_gap = 0.0;  // max abs difference of (s1, s2, s)
  bool start_ok = false;
  bool end_ok = false;
};
std::optional<ClosedPath> find_closed_path(const Pentagon& pent, double dtheta, int n_steps,
                                           const Tolerance& tol = {});

}  // namespace pu21
