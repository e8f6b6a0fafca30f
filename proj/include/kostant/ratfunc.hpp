#pragma once

#include <string>

#include "kostant/poly.hpp"

namespace kostant {

/// Rational function num/den over Q, kept with a monic denominator and
/// gcd(num, den) = 1 after every operation.
class RatFunc {
 public:
  RatFunc() : den_(RatPoly::constant(1)) {}
  RatFunc(const RatPoly& num) : num_(num), den_(RatPoly::constant(1)) {}  // NOLINT: implicit on purpose
  RatFunc(const QPoly& num) : RatFunc(to_rat_poly(num)) {}                // NOLINT
  RatFunc(RatPoly num, RatPoly den);

  static RatFunc from_int(long v) { return RatFunc(RatPoly::constant(BigRat(v))); }

  const RatPoly& num() const noexcept { return num_; }
  const RatPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  friend bool operator==(const RatFunc& x, const RatFunc& y) = default;

  BigRat evaluate(const BigRat& q) const;

  std::string to_string() const;

 private:
  RatPoly num_;
  RatPoly den_;
};

}  // namespace kostant
