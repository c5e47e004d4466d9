#include <doctest.h>

#include <cmath>
#include <random>

#include "pu21/bending.hpp"
#include "pu21/io.hpp"
#include "support.hpp"

using namespace pu21;
namespace ts = testing_support;

namespace {

std::size_t count_fields(const std::string& line) {
  std::size_t n = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    if (c == ',' && !quoted) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("format_double round trips") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    CHECK(std::stod(format_double(v)) == v);
  }
  for (double v : {0.0, 1.0, -2.5, 0.1, 1e-300, 1.7976931348623157e308})
    CHECK(std::stod(format_double(v)) == v);
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-3.0) == "-3");
}

TEST_CASE("pentagon JSON round trip") {
  const auto pent = ts::fixture();
  const Json j = pentagon_to_json(pent);
  const Pentagon back = pentagon_from_json(j);
  CHECK(back.delta == pent.delta);
  CHECK(ts::max_abs_diff(back.space.gram(), pent.space.gram()) == 0.0);
  for (int i = 0; i < 5; ++i) CHECK(norm_inf(back.p[i] - pent.p[i]) == 0.0);
  // same bytes on a second pass
  CHECK(pentagon_to_json(back).dump() == j.dump());
  CHECK(Json::parse(j.dump()).dump() == j.dump());
}

TEST_CASE("bent pentagons survive the round trip") {
  const Pentagon bent = bend_pentagon(ts::fixture(), 2, 0.3);
  const Pentagon back = pentagon_from_json(Json::parse(pentagon_to_json(bent).dump()));
  for (int i = 0; i < 5; ++i) CHECK(norm_inf(back.p[i] - bent.p[i]) == 0.0);
  CHECK(relation_residual(back) < 1e-9);
}

TEST_CASE("parse errors are input errors") {
  const Json good = pentagon_to_json(ts::fixture());
  auto kind = [](const Json& j) { return ts::error_kind([&] { pentagon_from_json(j); }); };

  Json j = good;
  j.erase("gram");
  CHECK(kind(j) == ErrorKind::InvalidInput);
  j = good;
  j["points"].erase("p5");
  CHECK(kind(j) == ErrorKind::InvalidInput);
  j = good;
  j["delta"] = "omega7";
  CHECK(kind(j) == ErrorKind::InvalidInput);
  j = good;
  j["points"]["p3"] = Json::array({1.0, 2.0});
  CHECK(kind(j) == ErrorKind::InvalidInput);
  j = good;
  j["points"]["p3"][0] = "x";
  CHECK(kind(j) == ErrorKind::InvalidInput);
  // a Gram matrix of the wrong signature
  j = good;
  j["gram"] = to_json(identity());
  CHECK(kind(j) == ErrorKind::InvalidInput);
  // a point that breaks the relation is rejected only when validating
  j = good;
  j["points"]["p2"][0][0] = j["points"]["p2"][0][0].get<double>() + 1e-3;
  CHECK(kind(j) == ErrorKind::InvalidInput);
  CHECK_NOTHROW(pentagon_from_json(j, {}, false));

  CHECK(ts::error_kind([] { complex_from_json(Json::array({1.0})); }) == ErrorKind::InvalidInput);
  CHECK(ts::error_kind([] { complex_from_json(Json("1+2i")); }) == ErrorKind::InvalidInput);
  CHECK(ts::error_kind([] { load_json("/nonexistent/pentagon.json"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("complex and vector encodings") {
  CHECK(to_json(cplx(1.5, -2.0)).dump() == "[1.5,-2.0]");
  CHECK(complex_from_json(Json::array({0.25, 4})) == cplx(0.25, 4.0));
  const Vec3 v{cplx(1, 2), cplx(-3, 0), cplx(0, 0.5)};
  CHECK(norm_inf(vec_from_json(to_json(v)) - v) == 0.0);
  CHECK(to_json(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("CSV rows line up with the header") {
  const std::string header = scan_csv_header();
  CHECK(header.rfind("theta,s1,s2,s,q1,q2,q3,q4,all,", 0) == 0);
  CHECK(header.substr(header.size() - 7) == ",reason");
  const std::size_t width = count_fields(header);
  CHECK(width == 10 + slack_names().size());

  for (const auto& r : bend_scan(ts::fixture(), 1, 2.0, 3, 3)) {
    const std::string line = scan_csv_row(r);
    CHECK(count_fields(line) == width);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(std::stod(line.substr(0, line.find(','))) == r.theta);
  }
  const auto rows = bend_scan(ts::fixture(), 1, 0.02, 1, 1);
  const std::string mid = scan_csv_row(rows[1]);
  CHECK(mid.find(",true,true,true,true,true,") != std::string::npos);
}

TEST_CASE("reports serialize deterministically") {
  const auto pent = ts::fixture();
  const std::string a = to_json(quadrangle_report(pent)).dump();
  const std::string b = to_json(quadrangle_report(pent)).dump();
  CHECK(a == b);
  const Json rep = Json::parse(a);
  CHECK(rep.contains("slacks"));
  CHECK(to_json(toledo(pent)).dump() == to_json(toledo(pent)).dump());
}
