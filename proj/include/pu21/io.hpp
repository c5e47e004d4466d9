#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pu21/bending.hpp"
#include "pu21/invariants.hpp"

namespace pu21 {

using Json = nlohmann::ordered_json;

// Shortest text that parses back to the same double.
std::string format_double(double v);

Json to_json(cplx z);  // [re, im]
Json to_json(const Vec3& v);
Json to_json(const Mat3& m);
Json to_json(const Rational& r);  // "p/q"

// Parsers throw InvalidInput on malformed data.
cplx complex_from_json(const Json& j);
Vec3 vec_from_json(const Json& j);
Mat3 mat_from_json(const Json& j);

Json pentagon_to_json(const Pentagon& pent);
// Parses and, unless validate is false, checks point signs and the relation residual.
// The Gram matrix is always checked for its signature.
Pentagon pentagon_from_json(const Json& j, const Tolerance& tol = {}, bool validate = true);
Pentagon load_pentagon(const std::string& path, const Tolerance& tol = {}, bool validate = true);
Json load_json(const std::string& path);

Json to_json(const SurfaceCoords& c);
Json to_json(const PConditions& pc);
Json to_json(const QuadrangleReport& rep);
Json to_json(const ToledoResult& t);
Json to_json(const EulerCertificate& cert);

// theta,s1,s2,s,q1,q2,q3,q4,all,<slack_names()...>,reason
std::string scan_csv_header();
std::string scan_csv_row(const BendScanRow& row);
Json to_json(const BendScanRow& row);

}  // namespace pu21
