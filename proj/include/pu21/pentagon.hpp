#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pu21/hermitian.hpp"
#include "pu21/triple.hpp"

namespace pu21 {

enum class CubeRoot { One, Omega, Omega2 };  // 1, e^{2pi i/3}, e^{-2pi i/3}

cplx value_of(CubeRoot d);
const char* to_string(CubeRoot d);
CubeRoot cube_root_from_string(const std::string& s);  // "1" | "omega" | "omega2"

struct Pentagon {
  HermitianSpace space;
  std::array<Vec3, 5> p;
  CubeRoot delta = CubeRoot::Omega2;

  Mat3 reflection_at(int i, const Tolerance& tol = {}) const;  // i in 1..5
};

// R^{p5} R^{p4} R^{p3} R^{p2} R^{p1}
Mat3 relation_product(const Pentagon& pent, const Tolerance& tol = {});
double relation_residual(const Pentagon& pent, const Tolerance& tol = {});

// Negative points p4, p5 on the axis of F with R^{p4} R^{p5} = F. The pair is centred
// on the axis at the midpoint of the feet of the two anchors, or at v1 - v2 without them.
std::pair<Vec3, Vec3> decompose_loxodromic(
    const Mat3& f, double t45, const HermitianSpace& s, const Tolerance& tol = {},
    const std::optional<std::pair<Vec3, Vec3>>& anchors = std::nullopt);

// p4, p5 are centred between the feet of p3 and p1 on the axis of F.
Pentagon build_pentagon(const SurfaceCoords& coords, CubeRoot delta, const Tolerance& tol = {});

// R^{p5}...R^{p1} = omega^2 turns into R^{p2}R^{p3}R^{p4}R^{p5}R^{p1} = omega; the returned
// pentagon lists the points in that order.
Pentagon reversed_relation(const Pentagon& pent);

struct PConditions {
  std::vector<std::pair<std::string, double>> tances;  // all ten pairs
  bool p1_ok = false;
  std::array<int, 5> signs{};
  bool p2_ok = false;
  double residual = 0.0;
  bool p3_ok = false;
  bool all_ok() const { return p1_ok && p2_ok && p3_ok; }
};
PConditions p_conditions(const Pentagon& pent, const Tolerance& tol = {});

// Throws InvalidInput when signs or the relation residual are off.
void validate_pentagon(const Pentagon& pent, const Tolerance& tol = {});

// Moves every point by an isometry of the same space (conjugates the relation).
Pentagon apply_isometry(const Pentagon& pent, const Mat3& iso);

}  // namespace pu21
