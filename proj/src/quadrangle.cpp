#include "pu21/quadrangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pu21/errors.hpp"
#include "pu21/isometry.hpp"

namespace pu21 {

Vec3 default_witness(const Pentagon& pent, const Tolerance& tol) {
  const auto& s = pent.space;
  const Vec3& q1 = pent.p[0];
  const Vec3& p3 = pent.p[2];
  if (sign(q1, s, tol) != Sign::Positive) fail(ErrorKind::NotPolarPoints, "p1 must be positive");
  Vec3 x = p3 - (s.inner(p3, q1) / s.inner(q1, q1)) * q1;
  if (sign(x, s, tol) != Sign::Negative)
    fail(ErrorKind::InvalidInput, "projection of p3 to C1 is not a negative point");
  x = normalized(x, s);
  const cplx h = s.inner(x, p3);
  if (std::abs(h) > 0.0) x = (-std::conj(h) / std::abs(h)) * x;  // <lx, p3> = l <x, p3>
  return x;
}

QuadrangleData polar_sequence(const Pentagon& pent, const std::optional<Vec3>& witness,
                              const Tolerance& tol) {
  const auto& s = pent.space;
  QuadrangleData d{s, {}, {}, {}, {}, {}, {}};
  for (int i = 0; i < 5; ++i) d.r[i] = reflection(pent.p[i], s, tol);
  d.q[0] = pent.p[0];
  for (int i = 1; i < 4; ++i) d.q[i] = d.r[i] * d.q[i - 1];

  if (witness) {
    const Vec3& w = *witness;
    if (std::abs(s.inner(w, d.q[0])) > tol.eq_tol * s.form_norm(w) * s.form_norm(d.q[0]))
      fail(ErrorKind::InvalidInput, "witness is not on C1");
    const Sign sg = sign(w, s, tol);
    if (sg == Sign::Positive) fail(ErrorKind::InvalidInput, "witness is a positive point");
    d.witness = sg == Sign::Negative ? normalized(w, s) : w;
  } else {
    d.witness = default_witness(pent, tol);
  }

  const auto& q = d.q;
  auto ta = [&](int a, int b) { return tance(q[a], q[b], s, tol); };
  d.tances = {{"ta_q1_q2", ta(0, 1)}, {"ta_q2_q3", ta(1, 2)}, {"ta_q3_q4", ta(2, 3)},
              {"ta_q4_q1", ta(3, 0)}, {"ta_q1_q3", ta(0, 2)}, {"ta_q4_q2", ta(3, 1)}};
  auto eta = [&](int a, int b, int c) {
    return s.inner(q[a], q[b]) * s.inner(q[b], q[c]) * s.inner(q[c], q[a]) /
           (s.inner(q[a], q[a]) * s.inner(q[b], q[b]) * s.inner(q[c], q[c]));
  };
  const cplx e1 = eta(0, 1, 2);
  const cplx e2 = eta(0, 2, 3);
  d.eps = e1 / std::abs(e1);
  d.chi = e2 / std::abs(e2);
  return d;
}

Vec3 c1_tangent(const QuadrangleData& d) {
  const auto& s = d.space;
  Vec3 u = orthogonal_complement_point(d.q[0], d.witness, s);
  u = normalized(u, s);
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(u[i]) > std::abs(u[k]) * (1.0 + 1e-12)) k = i;
  return (std::conj(u[k]) / std::abs(u[k])) * u;
}

Vec3 point_on_c1(const QuadrangleData& d, double r, double phi) {
  if (!(r >= 0.0 && r < 1.0)) fail(ErrorKind::InvalidInput, "radius must lie in [0, 1)");
  const Vec3 x = d.witness + std::polar(r, phi) * c1_tangent(d);
  return normalized(x, d.space);
}

double bisector_side(const Vec3& x, const Vec3& a, const Vec3& b, const HermitianSpace& s,
                     const Tolerance& tol) {
  const cplx ab = s.inner(a, b);
  if (std::abs(ab) <= tol.eq_tol * s.form_norm(a) * s.form_norm(b) ||
      projectively_equal(a, b, s, tol))
    fail(ErrorKind::DegenerateSpine, "endpoints do not span a spine");
  return (s.inner(a, x) * s.inner(x, b) / ab).imag();
}

NamedValues check_q1(const QuadrangleData& d) {
  NamedValues out;
  for (const auto& [name, t] : d.tances) out.emplace_back("q1." + name.substr(3), std::sqrt(t) - 1.0);
  return out;
}

static bool all_positive(const NamedValues& v) {
  for (const auto& [n, x] : v)
    if (!(x > 0.0)) return false;
  return true;
}

static double ta_of(const QuadrangleData& d, const std::string& name) {
  for (const auto& [n, t] : d.tances)
    if (n == name) return t;
  throw std::out_of_range(name);
}

// RHS - LHS of t_ab^2 e0^2 + t_bc^2 + t_ca^2 < 1 + 2 t_ab t_bc t_ca e0, with e0 moved
// to each of the three squared terms in turn.
static std::array<double, 3> triangle_slacks(double tab2, double tbc2, double tca2, double e0) {
  const double rhs = 1.0 + 2.0 * std::sqrt(tab2 * tbc2 * tca2) * e0;
  const double e2 = e0 * e0;
  return {rhs - (tab2 * e2 + tbc2 + tca2), rhs - (tab2 + tbc2 * e2 + tca2),
          rhs - (tab2 + tbc2 + tca2 * e2)};
}

static NamedValues q2_values(const QuadrangleData& d) {
  NamedValues out{{"q2.eps1", -d.eps.imag()}, {"q2.chi1", -d.chi.imag()}};
  const auto a = triangle_slacks(ta_of(d, "ta_q1_q2"), ta_of(d, "ta_q2_q3"), ta_of(d, "ta_q1_q3"),
                                 d.eps.real());
  const auto b = triangle_slacks(ta_of(d, "ta_q1_q3"), ta_of(d, "ta_q3_q4"), ta_of(d, "ta_q4_q1"),
                                 d.chi.real());
  const char* tags[3] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) out.emplace_back(std::string("q2.tri123_") + tags[i], a[i]);
  for (int i = 0; i < 3; ++i) out.emplace_back(std::string("q2.tri134_") + tags[i], b[i]);
  return out;
}

// |Re(<q4,q2><m,m>/(<q4,m><m,q2>)) - 1| compared to sqrt(1-1/ta(m,q4)) sqrt(1-1/ta(m,q2))
static double cotranchal_difference(const QuadrangleData& d, const Vec3& m, const Tolerance& tol) {
  const auto& s = d.space;
  const Vec3& q2 = d.q[1];
  const Vec3& q4 = d.q[3];
  const cplx z = s.inner(q4, q2) * s.inner(m, m) / (s.inner(q4, m) * s.inner(m, q2));
  const double rhs = std::sqrt(1.0 - 1.0 / tance(m, q4, s, tol)) *
                     std::sqrt(1.0 - 1.0 / tance(m, q2, s, tol));
  return std::abs(z.real() - 1.0) - rhs;
}

static NamedValues q3_values(const QuadrangleData& d, const Tolerance& tol) {
  const auto& s = d.space;
  const Vec3 y = d.r[4] * d.witness;
  return {{"q3.trans_c3", -cotranchal_difference(d, d.q[2], tol)},
          {"q3.trans_c1", -cotranchal_difference(d, d.q[0], tol)},
          {"q3.sector_23", bisector_side(y, d.q[1], d.q[2], s, tol)},
          {"q3.sector_12", bisector_side(y, d.q[0], d.q[1], s, tol)}};
}

static double q4_bracket(const QuadrangleData& d, const Vec3& x1) {
  const auto& s = d.space;
  const Vec3 x4 = d.r[3] * (d.r[2] * (d.r[1] * x1));
  return (s.inner(x1, d.q[1]) * s.inner(d.q[2], x4)).imag();
}

NamedValues check_q2(const QuadrangleData& d, const Tolerance&) {
  if (!all_positive(check_q1(d))) fail(ErrorKind::PreconditionQ1, "Q1 does not hold");
  return q2_values(d);
}

NamedValues check_q3(const QuadrangleData& d, const Tolerance& tol) {
  if (!all_positive(check_q1(d))) fail(ErrorKind::PreconditionQ1, "Q1 does not hold");
  return q3_values(d, tol);
}

NamedValues check_q4(const QuadrangleData& d, const Tolerance& tol) {
  if (!all_positive(check_q1(d)) || !all_positive(q2_values(d)) ||
      !all_positive(q3_values(d, tol)))
    fail(ErrorKind::PreconditionQ123, "Q1-Q3 do not all hold");
  return {{"q4.bracket", q4_bracket(d, d.witness)}};
}

static double checked_arg(cplx z, const Tolerance& tol, const char* which) {
  if (z.real() < 0.0 && std::abs(z.imag()) <= tol.eq_tol * std::abs(z))
    fail(ErrorKind::ArgBranch, std::string(which) + " lies on the branch cut");
  return std::arg(z);
}

std::array<double, 4> interior_angles(const QuadrangleData& d, const Vec3& x1,
                                      const Tolerance& tol) {
  const auto& s = d.space;
  const auto& q = d.q;
  const Vec3 x2 = d.r[1] * x1;
  const Vec3 x3 = d.r[2] * x2;
  const Vec3 x4 = d.r[3] * x3;
  auto ip = [&](const Vec3& a, const Vec3& b) { return s.inner(a, b); };
  return {
      checked_arg(ip(q[1], x1) * ip(x1, q[3]) / (ip(q[1], q[0]) * ip(q[0], q[3])), tol, "theta1"),
      checked_arg(ip(q[2], x2) * ip(x2, q[0]) / (ip(q[2], q[1]) * ip(q[1], q[0])), tol, "theta2"),
      checked_arg(ip(q[3], x3) * ip(x3, q[1]) / (ip(q[3], q[2]) * ip(q[2], q[1])), tol, "theta3"),
      checked_arg(ip(q[0], x4) * ip(x4, q[2]) / (ip(q[0], q[3]) * ip(q[3], q[2])), tol, "theta4"),
  };
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "true";
    case CheckStatus::Fail: return "false";
    case CheckStatus::NotEvaluated: return "na";
  }
  return "na";
}

double QuadrangleReport::slack(const std::string& name) const {
  for (const auto& [n, v] : slacks)
    if (n == name) return v;
  throw std::out_of_range(name);
}

double QuadrangleReport::value(const std::string& name) const {
  for (const auto& [n, v] : values)
    if (n == name) return v;
  throw std::out_of_range(name);
}

const std::vector<std::string>& slack_names() {
  static const std::vector<std::string> names = {
      "q1.q1_q2",      "q1.q2_q3",      "q1.q3_q4",      "q1.q4_q1",      "q1.q1_q3",
      "q1.q4_q2",      "q2.eps1",       "q2.chi1",       "q2.tri123_a",   "q2.tri123_b",
      "q2.tri123_c",   "q2.tri134_a",   "q2.tri134_b",   "q2.tri134_c",   "q3.trans_c3",
      "q3.trans_c1",   "q3.sector_23",  "q3.sector_12",  "q4.bracket"};
  return names;
}

QuadrangleReport quadrangle_report(const Pentagon& pent, const std::optional<Vec3>& witness,
                                   const Tolerance& tol) {
  QuadrangleReport rep;
  const QuadrangleData d = polar_sequence(pent, witness, tol);
  const auto& s = d.space;

  for (const auto& tv : d.tances) rep.values.push_back(tv);
  rep.values.emplace_back("eps0", d.eps.real());
  rep.values.emplace_back("eps1", d.eps.imag());
  rep.values.emplace_back("chi0", d.chi.real());
  rep.values.emplace_back("chi1", d.chi.imag());

  auto record = [&](const NamedValues& v) {
    bool ok = true;
    for (const auto& [n, x] : v) {
      rep.slacks.emplace_back(n, x);
      if (!(x > 0.0)) {
        ok = false;
        if (rep.first_failure.empty()) rep.first_failure = n;
      }
    }
    return ok ? CheckStatus::Pass : CheckStatus::Fail;
  };

  rep.q1 = record(check_q1(d));
  const bool q1 = rep.q1 == CheckStatus::Pass;

  const CheckStatus q2 = record(q2_values(d));
  rep.q2 = q1 ? q2 : CheckStatus::NotEvaluated;

  CheckStatus q3 = CheckStatus::NotEvaluated;
  try {
    const NamedValues v = q3_values(d, tol);
    q3 = record(v);
    rep.values.emplace_back("q3.trans_c3_difference", -v[0].second);
    rep.values.emplace_back("q3.trans_c1_difference", -v[1].second);
  } catch (const GeometryError& e) {
    if (rep.first_failure.empty()) rep.first_failure = std::string("q3: ") + e.what();
    q3 = CheckStatus::Fail;
  }
  rep.q3 = q1 ? q3 : CheckStatus::NotEvaluated;

  const bool q123 = q1 && rep.q2 == CheckStatus::Pass && rep.q3 == CheckStatus::Pass;
  const CheckStatus q4 = record({{"q4.bracket", q4_bracket(d, d.witness)}});
  rep.q4 = q123 ? q4 : CheckStatus::NotEvaluated;
  const Vec3 r5x = d.r[4] * d.witness;
  rep.values.emplace_back("q4.bracket_r5x",
                          (s.inner(d.witness, d.q[1]) * s.inner(d.q[2], r5x)).imag());

  try {
    const auto th = interior_angles(d, d.witness, tol);
    rep.angles = th;
    rep.values.emplace_back("angle_sum", th[0] + th[1] + th[2] + th[3]);
  } catch (const GeometryError&) {
    // angles stay absent
  }

  rep.all_ok = rep.q1 == CheckStatus::Pass && rep.q2 == CheckStatus::Pass &&
               rep.q3 == CheckStatus::Pass && rep.q4 == CheckStatus::Pass;
  if (rep.all_ok) rep.first_failure.clear();
  return rep;
}

}  // namespace pu21
