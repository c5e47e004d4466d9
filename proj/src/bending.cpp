#include "pu21/bending.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pu21/errors.hpp"
#include "pu21/isometry.hpp"

namespace pu21 {

static int wrap(int i) { return ((i - 1) % 5 + 5) % 5 + 1; }

BendingPair make_bending_pair(const Pentagon& pent, int i, const Tolerance& tol) {
  if (i < 1 || i > 5) fail(ErrorKind::InvalidInput, "pair index must be in 1..5");
  const auto& s = pent.space;
  const Mat3 m = pent.reflection_at(wrap(i + 1), tol) * pent.reflection_at(i, tol);
  LoxodromicFrame fr;
  try {
    fr = loxodromic_frame(m, s, tol);
  } catch (const GeometryError& e) {
    fail(ErrorKind::FrameFailure, e.what());
  }
  const cplx h = s.inner(fr.v1, fr.v2);
  if (std::abs(h) == 0.0) fail(ErrorKind::FrameFailure, "fixed points are orthogonal");
  BendingPair b;
  b.i = i;
  b.v1 = fr.v1;
  b.v2 = (1.0 / std::conj(h)) * fr.v2;
  b.c = normalized(fr.c, s);
  b.basis_change = from_columns(b.c, b.v1, b.v2);
  try {
    b.basis_inverse = inverse(b.basis_change);
  } catch (const std::domain_error&) {
    fail(ErrorKind::FrameFailure, "frame is not a basis");
  }
  return b;
}

Mat3 bending(const BendingPair& pair, double theta) {
  const Mat3 d = diag(1.0, std::exp(theta), std::exp(-theta));
  return renormalize_su21(pair.basis_change * d * pair.basis_inverse);
}

Pentagon bend_pentagon(const Pentagon& pent, int i, double theta, const Tolerance& tol) {
  if (theta == 0.0) return pent;
  const BendingPair pair = make_bending_pair(pent, i, tol);
  const Mat3 b = bending(pair, theta);
  Pentagon out = pent;
  for (int k : {i, wrap(i + 1)}) out.p[k - 1] = unit_scaled(b * pent.p[k - 1], pent.space);
  const double res = relation_residual(out, tol);
  if (!(res < 10.0 * tol.residual_tol))
    fail(ErrorKind::ResidualBlowup, "relation residual " + num(res));
  return out;
}

SurfaceCoords pentagon_coords(const Pentagon& pent, const Tolerance& tol) {
  return coords_from_triple(RegularTriple{pent.space, {pent.p[0], pent.p[1], pent.p[2]}}, tol);
}

static BendScanRow evaluate_row(const Pentagon& base, int i, double theta, const Tolerance& tol) {
  BendScanRow row;
  row.theta = theta;
  try {
    const Pentagon p = bend_pentagon(base, i, theta, tol);
    row.coords = pentagon_coords(p, tol);
    row.report = quadrangle_report(p, std::nullopt, tol);
  } catch (const GeometryError& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<BendScanRow> bend_scan(const Pentagon& pent, int i, double dtheta, int n_pos,
                                   int n_neg, const Tolerance& tol) {
  if (dtheta == 0.0 || !std::isfinite(dtheta))
    fail(ErrorKind::InvalidInput, "dtheta must be finite and nonzero");
  if (n_pos < 0 || n_neg < 0) fail(ErrorKind::InvalidInput, "step counts must be nonnegative");
  make_bending_pair(pent, i, tol);  // frame errors abort before any row
  std::vector<BendScanRow> rows;
  rows.reserve(static_cast<size_t>(n_pos + n_neg + 1));
  for (int k = -n_neg; k <= n_pos; ++k) rows.push_back(evaluate_row(pent, i, k * dtheta, tol));
  std::sort(rows.begin(), rows.end(),
            [](const BendScanRow& a, const BendScanRow& b) { return a.theta < b.theta; });
  return rows;
}

FailureOnsets failure_onsets(const std::vector<BendScanRow>& rows) {
  FailureOnsets f;
  for (const auto& r : rows) {
    if (r.theta > 0.0 && !r.all_ok() && (!f.positive || r.theta < *f.positive)) f.positive = r.theta;
    if (r.theta < 0.0 && !r.all_ok() && (!f.negative || r.theta > *f.negative)) f.negative = r.theta;
  }
  return f;
}

Pentagon composed_walk(const Pentagon& pent, const std::vector<WalkStep>& steps,
                       const Tolerance& tol) {
  Pentagon cur = pent;
  for (const auto& [i, theta] : steps) cur = bend_pentagon(cur, i, theta, tol);
  return cur;
}

// Roots of g on the grid k*dtheta, k = 1..n and -1..-n, refined by bisection.
static std::vector<double> grid_roots(const std::function<double(double)>& g, double dtheta, int n,
                                      bool include_zero_cell) {
  std::vector<double> roots;
  for (int dir : {1, -1}) {
    const int k0 = include_zero_cell ? 0 : 1;
    double a = dir * k0 * dtheta;
    double ga = g(a);
    for (int k = k0 + 1; k <= n; ++k) {
      const double b = dir * k * dtheta;
      const double gb = g(b);
      if (std::isfinite(ga) && std::isfinite(gb) && (ga < 0.0) != (gb < 0.0)) {
        double lo = a, hi = b, glo = ga;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double gm = g(mid);
          if (!std::isfinite(gm)) break;
          if ((gm < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = gm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
      a = b;
      ga = gb;
    }
  }
  return roots;
}

std::optional<ClosedPath> find_closed_path(const Pentagon& pent, double dtheta, int n_steps,
                                           const Tolerance& tol) {
  const SurfaceCoords c0 = pentagon_coords(pent, tol);
  const bool ok0 = quadrangle_report(pent, std::nullopt, tol).all_ok;
  auto coords_or_nan = [&](const Pentagon& p, int i, double th) {
    try {
      return pentagon_coords(bend_pentagon(p, i, th, tol), tol);
    } catch (const GeometryError&) {
      SurfaceCoords bad;
      bad.s1 = bad.s2 = bad.s = NAN;
      return bad;
    }
  };

  for (int k = 1; k <= n_steps; ++k) {
    for (int dir : {1, -1}) {
      const double ta = dir * k * dtheta;
      Pentagon pa = pent;
      try {
        pa = bend_pentagon(pent, 1, ta, tol);
        if (quadrangle_report(pa, std::nullopt, tol).all_ok == ok0) continue;
      } catch (const GeometryError&) {
        continue;
      }
      // along the s2-preserving direction, look for s1 returning to its start value
      auto g = [&](double th) { return coords_or_nan(pa, 2, th).s1 - c0.s1; };
      for (double tb : grid_roots(g, dtheta, n_steps, false)) {
        Pentagon pb = pa;
        try {
          pb = bend_pentagon(pa, 2, tb, tol);
        } catch (const GeometryError&) {
          continue;
        }
        auto h = [&](double th) { return coords_or_nan(pb, 1, th).s2 - c0.s2; };
        for (double tc : grid_roots(h, dtheta, n_steps, true)) {
          try {
            const Pentagon pc = bend_pentagon(pb, 1, tc, tol);
            const SurfaceCoords c = pentagon_coords(pc, tol);
            const double gap = std::max(
                {std::abs(c.s1 - c0.s1), std::abs(c.s2 - c0.s2), std::abs(c.s - c0.s)});
            if (!(gap < 1e-6)) continue;
            const bool ok = quadrangle_report(pc, std::nullopt, tol).all_ok;
            if (ok == ok0) continue;
            return ClosedPath{{{1, ta}, {2, tb}, {1, tc}}, c0, c, gap, ok0, ok};
          } catch (const GeometryError&) {
            continue;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pu21
