#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pu21 {

// Exact rational with a positive, reduced denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

Rational abs(const Rational& r);

// Closest rational with denominator <= max_den, if within tol of x.
std::optional<Rational> snap_rational(double x, int max_den, double tol);

}  // namespace pu21
