#include "pu21/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pu21/errors.hpp"

namespace pu21 {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vec3& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(to_json(z));
  return j;
}

Json to_json(const Mat3& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(to_json(z));
    j.push_back(r);
  }
  return j;
}

Json to_json(const Rational& r) { return r.str(); }

static double number(const Json& j) {
  if (!j.is_number()) fail(ErrorKind::InvalidInput, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(ErrorKind::InvalidInput, "non-finite number");
  return v;
}

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {number(j), 0.0};
  if (!j.is_array() || j.size() != 2) fail(ErrorKind::InvalidInput, "complex must be [re, im]");
  return {number(j[0]), number(j[1])};
}

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::InvalidInput, "vector must have 3 entries");
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = complex_from_json(j[i]);
  return v;
}

Mat3 mat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::InvalidInput, "matrix must have 3 rows");
  Mat3 m;
  for (int i = 0; i < 3; ++i) m[i] = vec_from_json(j[i]);
  return m;
}

Json pentagon_to_json(const Pentagon& pent) {
  Json j;
  j["gram"] = to_json(pent.space.gram());
  Json pts;
  for (int i = 0; i < 5; ++i) pts["p" + std::to_string(i + 1)] = to_json(pent.p[i]);
  j["points"] = pts;
  j["delta"] = to_string(pent.delta);
  return j;
}

Pentagon pentagon_from_json(const Json& j, const Tolerance& tol, bool validate) {
  if (!j.is_object() || !j.contains("gram") || !j.contains("points") || !j.contains("delta"))
    fail(ErrorKind::InvalidInput, "pentagon needs gram, points and delta");
  const Json& pts = j["points"];
  if (!pts.is_object()) fail(ErrorKind::InvalidInput, "points must be an object");
  if (!j["delta"].is_string()) fail(ErrorKind::InvalidInput, "delta must be a string");

  std::array<Vec3, 5> p;
  for (int i = 0; i < 5; ++i) {
    const std::string key = "p" + std::to_string(i + 1);
    if (!pts.contains(key)) fail(ErrorKind::InvalidInput, "missing " + key);
    p[i] = vec_from_json(pts[key]);
  }
  CubeRoot delta;
  try {
    delta = cube_root_from_string(j["delta"].get<std::string>());
  } catch (const GeometryError& e) {
    fail(ErrorKind::InvalidInput, e.what());
  }
  try {
    Pentagon pent{HermitianSpace(mat_from_json(j["gram"])), p, delta};
    if (validate) validate_pentagon(pent, tol);
    return pent;
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::InvalidInput) throw;
    fail(ErrorKind::InvalidInput, e.what());
  }
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("parse error: ") + e.what());
  }
}

Pentagon load_pentagon(const std::string& path, const Tolerance& tol, bool validate) {
  return pentagon_from_json(load_json(path), tol, validate);
}

Json to_json(const SurfaceCoords& c) {
  Json j;
  j["s1"] = c.s1;
  j["s2"] = c.s2;
  j["s"] = c.s;
  j["sigma"] = Json::array({c.sigma[0], c.sigma[1], c.sigma[2]});
  j["tau"] = to_json(c.tau);
  return j;
}

static Json named(const NamedValues& v) {
  Json j = Json::object();
  for (const auto& [n, x] : v) j[n] = x;
  return j;
}

Json to_json(const PConditions& pc) {
  Json j;
  j["tances"] = named(pc.tances);
  j["p1"] = pc.p1_ok;
  j["signs"] = pc.signs;
  j["p2"] = pc.p2_ok;
  j["residual"] = pc.residual;
  j["p3"] = pc.p3_ok;
  j["all_ok"] = pc.all_ok();
  return j;
}

Json to_json(const QuadrangleReport& rep) {
  Json j;
  j["q1"] = to_string(rep.q1);
  j["q2"] = to_string(rep.q2);
  j["q3"] = to_string(rep.q3);
  j["q4"] = to_string(rep.q4);
  j["all_ok"] = rep.all_ok;
  j["first_failure"] = rep.first_failure;
  j["slacks"] = named(rep.slacks);
  j["values"] = named(rep.values);
  if (rep.angles)
    j["angles"] = *rep.angles;
  else
    j["angles"] = nullptr;
  return j;
}

Json to_json(const ToledoResult& t) {
  Json j;
  j["raw_mod2"] = t.raw_mod2;
  j["tau"] = to_json(t.tau);
  j["chi"] = to_json(t.chi);
  j["tau_over_chi"] = to_json(t.tau / t.chi);
  j["snap_residual"] = t.snap_residual;
  j["steps"] = t.steps;
  return j;
}

Json to_json(const EulerCertificate& cert) {
  Json j;
  j["m"] = to_json(cert.m);
  for (int i = 0; i < 4; ++i) j["m" + std::to_string(i + 1)] = to_json(cert.mi[i]);
  j["z1"] = to_json(cert.z1);
  j["z1_eigenvalue"] = to_json(cert.z1_eigenvalue);
  j["z1_eigenvalue_left"] = to_json(cert.z1_eigenvalue_left);
  j["direction_tests"] = named(cert.direction_tests);
  j["checks"] = named(cert.checks);
  Json g = Json::object();
  for (const auto& [n, ok] : cert.gates) g[n] = ok;
  j["gates"] = g;
  Json segs = Json::array();
  for (const auto& r : cert.segment_signs) segs.push_back(to_json(r));
  j["segment_signs"] = segs;
  j["e"] = cert.e ? to_json(*cert.e) : Json(nullptr);
  j["failed_gate"] = cert.failed_gate;
  return j;
}

std::string scan_csv_header() {
  std::string h = "theta,s1,s2,s,q1,q2,q3,q4,all";
  for (const auto& n : slack_names()) h += "," + n;
  return h + ",reason";
}

static std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scan_csv_row(const BendScanRow& row) {
  std::string out = format_double(row.theta);
  if (row.coords)
    out += "," + format_double(row.coords->s1) + "," + format_double(row.coords->s2) + "," +
           format_double(row.coords->s);
  else
    out += ",,,";
  if (row.report) {
    const auto& r = *row.report;
    for (auto st : {r.q1, r.q2, r.q3, r.q4}) out += std::string(",") + to_string(st);
    out += r.all_ok ? ",true" : ",false";
    for (const auto& n : slack_names()) {
      out += ",";
      for (const auto& [name, v] : r.slacks)
        if (name == n) {
          out += format_double(v);
          break;
        }
    }
    out += "," + csv_field(r.first_failure);
  } else {
    out += ",na,na,na,na,false";
    for (std::size_t k = 0; k < slack_names().size(); ++k) out += ",";
    out += "," + csv_field(row.error);
  }
  return out;
}

Json to_json(const BendScanRow& row) {
  Json j;
  j["theta"] = row.theta;
  j["coords"] = row.coords ? to_json(*row.coords) : Json(nullptr);
  j["report"] = row.report ? to_json(*row.report) : Json(nullptr);
  j["error"] = row.error;
  j["all_ok"] = row.all_ok();
  return j;
}

}  // namespace pu21
