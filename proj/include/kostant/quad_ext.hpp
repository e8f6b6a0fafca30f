#pragma once

#include <string>

#include "kostant/ratfunc.hpp"

namespace kostant {

/*
 * Element a + b*s of Q(q)[s]/(s^2 - (q^2 + 4)). Both components are reduced
 * rational functions, so componentwise equality is equality in the field.
 */
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadExt(const RatFunc& a) : a_(a) {}  // NOLINT: rationals embed

  /// The generator s = sqrt(q^2 + 4).
  static QuadExt s();

  /// q^2 + 4.
  static const RatFunc& discriminant();

  const RatFunc& rational_part() const noexcept { return a_; }
  const RatFunc& s_part() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  QuadExt conjugate() const { return {a_, -b_}; }

  /// a^2 - b^2 (q^2 + 4); multiplicative.
  RatFunc norm() const;

  QuadExt operator-() const { return {-a_, -b_}; }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt& x, const QuadExt& y) = default;

  std::string to_string() const;

 private:
  RatFunc a_;
  RatFunc b_;
};

QuadExt pow(const QuadExt& x, unsigned long k);

}  // namespace kostant
