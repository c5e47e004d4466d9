#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pu21/errors.hpp"
#include "pu21/io.hpp"

#ifndef PU21_FIXTURE
#define PU21_FIXTURE "fixtures/paper_example.json"
#endif

using namespace pu21;

namespace {

enum Exit { Ok = 0, Verification = 2, Construction = 3, Input = 4, Precondition = 5 };

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  int pair = 1;
  double dtheta = 0.02;
  int steps_pos = 250;
  int steps_neg = 250;
  double eq_tol = Tolerance{}.eq_tol;
  double residual_tol = Tolerance{}.residual_tol;
  std::string witness;
  std::string tau;
  std::optional<double> s1, s2, t45;
  int root = 0;
  std::string delta = "omega2";
};

struct Failure {
  int code;
  std::string message;
};

Tolerance tolerance(const Options& o) {
  Tolerance t;
  t.eq_tol = o.eq_tol;
  t.residual_tol = o.residual_tol;
  try {
    t.validate();
  } catch (const GeometryError& e) {
    throw Failure{Input, e.what()};
  }
  return t;
}

int precondition_or(const GeometryError& e, int fallback) {
  switch (e.kind()) {
    case ErrorKind::PreconditionQ1:
    case ErrorKind::PreconditionQ123:
    case ErrorKind::PreconditionQuadrangle:
      return Precondition;
    default:
      return fallback;
  }
}

Pentagon read_pentagon(const std::string& path, const Tolerance& tol) {
  if (path.empty()) throw Failure{Input, "--input is required"};
  try {
    return load_pentagon(path, tol);
  } catch (const GeometryError& e) {
    throw Failure{Input, e.what()};
  }
}

std::optional<Vec3> parse_witness(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return vec_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw Failure{Input, std::string("--witness: ") + e.what()};
  } catch (const GeometryError& e) {
    throw Failure{Input, std::string("--witness: ") + e.what()};
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw Failure{Input, "cannot write " + o.output};
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_build(const Options& o) {
  const Tolerance tol = tolerance(o);
  if (!o.s1 || !o.s2 || !o.t45) throw Failure{Input, "build needs --s1, --s2 and --t45"};
  CubeRoot delta;
  try {
    delta = cube_root_from_string(o.delta);
  } catch (const GeometryError& e) {
    throw Failure{Input, e.what()};
  }
  try {
    if (delta == CubeRoot::One) fail(ErrorKind::DeltaOne, "delta = 1 admits no pentagon");
    if (!(*o.t45 > 1.0)) fail(ErrorKind::InvalidCoords, "t45 must exceed 1");
    SurfaceCoords c;
    c.s1 = *o.s1;
    c.s2 = *o.s2;
    if (o.tau.empty()) {
      c.tau = value_of(delta) * (4.0 * *o.t45 - 1.0);
    } else {
      try {
        c.tau = complex_from_json(Json::parse(o.tau));
      } catch (const Json::exception& e) {
        throw Failure{Input, std::string("--tau: ") + e.what()};
      }
      const cplx tr_f = std::conj(value_of(delta)) * c.tau;
      if (std::abs((tr_f.real() + 1.0) / 4.0 - *o.t45) > 1e-6 || std::abs(tr_f.imag()) > 1e-6)
        fail(ErrorKind::TraceMismatch, "--tau and --t45 disagree");
    }
    const auto roots = solve_s(c.s1, c.s2, kappa_of(c.tau), tol);
    if (o.root < 0 || o.root >= static_cast<int>(roots.size()))
      fail(ErrorKind::InvalidCoords, "root index " + std::to_string(o.root) + " out of range (" +
                                         std::to_string(roots.size()) + " real roots)");
    c.s = roots[o.root];
    const Pentagon pent = build_pentagon(c, delta, tol);

    Json report;
    report["coords"] = to_json(c);
    report["p_conditions"] = to_json(p_conditions(pent, tol));
    report["quadrangle"] = to_json(quadrangle_report(pent, std::nullopt, tol));
    if (o.output.empty()) {
      Json both;
      both["pentagon"] = pentagon_to_json(pent);
      both["report"] = report;
      std::cout << dump(both);
    } else {
      emit(o, dump(pentagon_to_json(pent)));
      std::cout << dump(report);
    }
    return Ok;
  } catch (const GeometryError& e) {
    throw Failure{Construction, e.what()};
  }
}

int cmd_check(const Options& o) {
  const Tolerance tol = tolerance(o);
  const Pentagon pent = read_pentagon(o.input, tol);
  const auto witness = parse_witness(o.witness);
  try {
    const QuadrangleReport rep = quadrangle_report(pent, witness, tol);
    Json report;
    report["coords"] = to_json(pentagon_coords(pent, tol));
    report["p_conditions"] = to_json(p_conditions(pent, tol));
    report["quadrangle"] = to_json(rep);
    emit(o, dump(report));
    if (!rep.all_ok) std::cerr << "check failed: " << rep.first_failure << "\n";
    return rep.all_ok ? Ok : Verification;
  } catch (const GeometryError& e) {
    throw Failure{precondition_or(e, Input), e.what()};
  }
}

int cmd_invariants(const Options& o) {
  const Tolerance tol = tolerance(o);
  const Pentagon pent = read_pentagon(o.input, tol);
  const auto witness = parse_witness(o.witness);
  try {
    const QuadrangleReport rep = quadrangle_report(pent, witness, tol);
    if (!rep.all_ok)
      throw Failure{Precondition, "quadrangle conditions fail at " + rep.first_failure};
    Json out;
    out["quadrangle"] = to_json(rep);
    out["toledo"] = to_json(toledo(pent, witness, tol));
    out["euler_cross_check"] = to_json(euler_cross_check(pent, witness, tol));
    const EulerCertificate cert = euler_certificate(pent, EulerOptions{witness, std::nullopt}, tol);
    out["euler"] = to_json(cert);
    emit(o, dump(out));
    if (!cert.failed_gate.empty()) {
      std::cerr << "euler pipeline failed at gate " << cert.failed_gate << "\n";
      return Verification;
    }
    return Ok;
  } catch (const GeometryError& e) {
    throw Failure{precondition_or(e, Verification), e.what()};
  }
}

int cmd_bend_scan(const Options& o) {
  const Tolerance tol = tolerance(o);
  if (o.format != "csv" && o.format != "json") throw Failure{Input, "--format must be csv or json"};
  const Pentagon pent = read_pentagon(o.input, tol);
  if (o.pair < 1 || o.pair > 5) throw Failure{Input, "--pair must lie in 1..5"};
  if (!(o.dtheta != 0.0) || !std::isfinite(o.dtheta)) throw Failure{Input, "--dtheta must be nonzero"};
  if (o.steps_pos < 0 || o.steps_neg < 0) throw Failure{Input, "step counts must be non-negative"};
  std::vector<BendScanRow> rows;
  try {
    rows = bend_scan(pent, o.pair, o.dtheta, o.steps_pos, o.steps_neg, tol);
  } catch (const GeometryError& e) {
    throw Failure{Input, e.what()};
  }
  std::ostringstream out;
  if (o.format == "csv") {
    out << scan_csv_header() << "\n";
    for (const auto& r : rows) out << scan_csv_row(r) << "\n";
  } else {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(to_json(r));
    out << dump(j);
  }
  emit(o, out.str());
  return Ok;
}

bool close(double a, double b) { return std::abs(a - b) <= 0.01; }

int cmd_verify_example(const Options& o) {
  const Tolerance tol = tolerance(o);
  const std::string path = o.input.empty() ? PU21_FIXTURE : o.input;
  Json fx;
  Pentagon pent = [&] {
    try {
      fx = load_json(path);
      return pentagon_from_json(fx, tol, false);
    } catch (const GeometryError& e) {
      throw Failure{Input, e.what()};
    }
  }();
  std::optional<Vec3> witness;
  if (fx.contains("witness")) witness = vec_from_json(fx["witness"]);

  std::ostringstream t;
  t.precision(6);
  auto row = [&](const std::string& name, double v) { t << "  " << name << " = " << v << "\n"; };

  const PConditions pc = p_conditions(pent, tol);
  t << "relation\n";
  row("residual", pc.residual);
  t << "  P1 " << (pc.p1_ok ? "ok" : "FAIL") << "  P2 " << (pc.p2_ok ? "ok" : "FAIL") << "  P3 "
    << (pc.p3_ok ? "ok" : "FAIL") << "\n";
  if (!pc.all_ok()) {
    std::cout << t.str();
    const std::string which = !pc.p3_ok ? "relation residual" : !pc.p2_ok ? "point signs" : "point tances";
    std::cerr << "verification failed: " << which << "\n";
    return Verification;
  }

  QuadrangleReport rep;
  try {
    rep = quadrangle_report(pent, witness, tol);
  } catch (const GeometryError& e) {
    std::cout << t.str();
    std::cerr << "verification failed: " << e.what() << "\n";
    return Verification;
  }
  t << "quadrangle\n";
  for (const auto& [n, v] : rep.values) row(n, v);
  for (const auto& [n, v] : rep.slacks) row(n, v);
  t << "  Q1 " << to_string(rep.q1) << "  Q2 " << to_string(rep.q2) << "  Q3 " << to_string(rep.q3)
    << "  Q4 " << to_string(rep.q4) << "\n";
  if (!rep.all_ok) {
    std::cout << t.str();
    std::cerr << "verification failed: " << rep.first_failure << "\n";
    return Verification;
  }

  try {
    const ToledoResult tr = toledo(pent, witness, tol);
    t << "toledo\n";
    row("raw", tr.raw_mod2);
    t << "  tau = " << tr.tau.str() << "  chi = " << tr.chi.str() << "\n";

    EulerOptions eo{witness, std::nullopt};
    if (fx.contains("boundary_samples"))
      eo.samples = std::make_pair(vec_from_json(fx["boundary_samples"]["za"]),
                                  vec_from_json(fx["boundary_samples"]["zb"]));
    const EulerCertificate cert = euler_certificate(pent, eo, tol);
    t << "euler\n";
    for (const auto& [n, v] : cert.direction_tests) row(n, v);
    for (const auto& [n, ok] : cert.gates) t << "  gate " << n << " " << (ok ? "ok" : "FAIL") << "\n";
    t << "  e = " << (cert.e ? cert.e->str() : std::string("n/a")) << "\n";
    t << "  cross check e = " << euler_cross_check(pent, witness, tol).str() << "\n";
    std::cout << t.str();

    if (!cert.failed_gate.empty()) {
      std::cerr << "verification failed: euler gate " << cert.failed_gate << "\n";
      return Verification;
    }
    if (!(tr.tau == Rational(-1, 3)) || !(*cert.e == Rational(0))) {
      std::cerr << "verification failed: invariants differ from tau = -1/3, e = 0\n";
      return Verification;
    }
  } catch (const GeometryError& e) {
    std::cout << t.str();
    std::cerr << "verification failed: " << e.what() << "\n";
    return Verification;
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pentagon relations, quadrangle checks, bending scans and invariants"};
  app.require_subcommand(1);
  Options o;

  auto tol_flags = [&](CLI::App* c) {
    c->add_option("--eq-tol", o.eq_tol, "equality tolerance");
    c->add_option("--residual-tol", o.residual_tol, "relation residual tolerance");
  };
  auto io_flags = [&](CLI::App* c, bool need_input) {
    auto* in = c->add_option("--input", o.input, "pentagon JSON");
    if (need_input) in->required();
    c->add_option("--output", o.output, "output path (default stdout)");
  };

  auto* verify = app.add_subcommand("verify-example", "check the bundled example end to end");
  verify->add_option("--input", o.input, "pentagon JSON (default: bundled fixture)");
  tol_flags(verify);

  auto* build = app.add_subcommand("build", "construct a pentagon from surface coordinates");
  build->add_option("--s1", o.s1, "tance-type coordinate s1")->required();
  build->add_option("--s2", o.s2, "tance-type coordinate s2")->required();
  build->add_option("--t45", o.t45, "tance of p4 and p5")->required();
  build->add_option("--root", o.root, "index into the ascending roots for s");
  build->add_option("--delta", o.delta, "1 | omega | omega2");
  build->add_option("--tau", o.tau, "trace as JSON [re, im]; default delta (4 t45 - 1)");
  build->add_option("--output", o.output, "write the pentagon here, report to stdout");
  tol_flags(build);

  auto* check = app.add_subcommand("check", "quadrangle report for a pentagon");
  io_flags(check, true);
  check->add_option("--witness", o.witness, "point of C1 as JSON [[re,im],[re,im],[re,im]]");
  tol_flags(check);

  auto* inv = app.add_subcommand("invariants", "Toledo invariant and Euler number");
  io_flags(inv, true);
  inv->add_option("--witness", o.witness, "point of C1 as JSON [[re,im],[re,im],[re,im]]");
  tol_flags(inv);

  auto* scan = app.add_subcommand("bend-scan", "scan a bending direction");
  io_flags(scan, true);
  scan->add_option("--pair", o.pair, "bending pair index 1..5");
  scan->add_option("--dtheta", o.dtheta, "step size");
  scan->add_option("--steps-pos", o.steps_pos, "steps with positive theta");
  scan->add_option("--steps-neg", o.steps_neg, "steps with negative theta");
  scan->add_option("--format", o.format, "csv | json");
  tol_flags(scan);
  o.format = "csv";

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? Ok : Input;
  }

  try {
    if (*verify) return cmd_verify_example(o);
    if (*build) return cmd_build(o);
    if (*check) return cmd_check(o);
    if (*inv) return cmd_invariants(o);
    if (*scan) return cmd_bend_scan(o);
  } catch (const Failure& f) {
    std::cerr << f.message << "\n";
    return f.code;
  } catch (const GeometryError& e) {
    std::cerr << e.what() << "\n";
    return Verification;
  }
  return Input;
}
