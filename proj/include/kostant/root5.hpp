#pragma once

#include <string>

#include "kostant/bigrat.hpp"

namespace kostant {

/// Element a + b*sqrt(5) of Q(sqrt 5).
class Root5 {
 public:
  Root5() = default;
  Root5(BigRat a, BigRat b = 0) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT: rationals embed
  Root5(long a, long b = 0) : a_(a), b_(b) {}                            // NOLINT

  static Root5 sqrt5() { return {0, 1}; }

  const BigRat& rational_part() const noexcept { return a_; }
  const BigRat& sqrt5_part() const noexcept { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  Root5 conjugate() const { return {a_, -b_}; }
  BigRat norm() const { return a_ * a_ - 5 * b_ * b_; }

  /// Sign of a + b*sqrt(5), decided exactly.
  int sign() const;

  double to_double() const;

  Root5 operator-() const { return {-a_, -b_}; }
  Root5& operator+=(const Root5& y);
  Root5& operator-=(const Root5& y);
  Root5& operator*=(const Root5& y);
  friend Root5 operator+(Root5 x, const Root5& y) { return x += y; }
  friend Root5 operator-(Root5 x, const Root5& y) { return x -= y; }
  friend Root5 operator*(Root5 x, const Root5& y) { return x *= y; }
  friend Root5 operator/(const Root5& x, const Root5& y);
  friend bool operator==(const Root5& x, const Root5& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// "a + b*sqrt(5)" with exact rationals.
  std::string to_string() const;

 private:
  BigRat a_;
  BigRat b_;
};

Root5 pow(const Root5& x, unsigned long k);

/// The rational value of x; throws NonRationalResult when the sqrt(5) part is nonzero.
BigRat require_rational(const Root5& x, const std::string& what);

}  // namespace kostant
