#include "pu21/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pu21 {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
Rational operator/(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational abs(const Rational& r) { return {r.num() < 0 ? -r.num() : r.num(), r.den()}; }

std::optional<Rational> snap_rational(double x, int max_den, double tol) {
  std::optional<Rational> best;
  double best_err = tol;
  for (int d = 1; d <= max_den; ++d) {
    const double n = std::round(x * d);
    const double err = std::abs(x - n / d);
    if (err <= best_err && (!best || err < best_err)) {
      best = Rational(static_cast<std::int64_t>(n), d);
      best_err = err;
    }
  }
  return best;
}

}  // namespace pu21
