#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kostant/bigrat.hpp"

namespace kostant {

/*
 * Dense univariate polynomial in q. Index i of the coefficient vector holds
 * the coefficient of q^i. The vector never ends in a zero, so the zero
 * polynomial is the empty vector and structural equality is polynomial
 * equality.
 */
template <class T>
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static DensePoly constant(const T& c) { return DensePoly(std::vector<T>{c}); }

  static DensePoly monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return DensePoly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

  /// Coefficient of q^i; zero beyond the degree.
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  std::span<const T> coeffs() const noexcept { return c_; }

  const T& leading() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  long valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<long>(i);
    return -1;
  }

  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const T& x) { return x != 0; }));
  }

  DensePoly& operator+=(const DensePoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
  }

  DensePoly& operator-=(const DensePoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
  }

  DensePoly& operator*=(const T& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  DensePoly& operator*=(const DensePoly& rhs) {
    *this = *this * rhs;
    return *this;
  }

  /// Multiply by q^k.
  DensePoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<T> v(k, T(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return DensePoly(std::move(v));
  }

  /// Add q^shift * rhs in place; the DP inner loop.
  void add_shifted(const DensePoly& rhs, std::size_t shift) {
    if (rhs.is_zero()) return;
    if (rhs.c_.size() + shift > c_.size()) c_.resize(rhs.c_.size() + shift, T(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i + shift] += rhs.c_[i];
    normalize();
  }

  DensePoly operator-() const {
    DensePoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
  friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
  friend DensePoly operator*(DensePoly lhs, const T& s) { return lhs *= s; }
  friend DensePoly operator*(const T& s, DensePoly rhs) { return rhs *= s; }

  friend DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<T> v(lhs.c_.size() + rhs.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return DensePoly(std::move(v));
  }

  friend bool operator==(const DensePoly& lhs, const DensePoly& rhs) { return lhs.c_ == rhs.c_; }

  /// Formal derivative d/dq.
  DensePoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<unsigned long>(i));
    return DensePoly(std::move(v));
  }

  /// Horner evaluation in any ring U that T converts into.
  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  /// Human-readable form, e.g. "q + 2*q^2 + q^3"; "0" for zero.
  std::string to_string() const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
DensePoly<T> pow(const DensePoly<T>& base, unsigned long k) {
  DensePoly<T> result = DensePoly<T>::constant(T(1));
  DensePoly<T> b = base;
  while (k > 0) {
    if (k & 1UL) result = result * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return result;
}

template <class T>
std::string DensePoly<T>::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    T c = c_[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mag = kostant::to_string(c);
    if (i == 0) {
      out += mag;
      continue;
    }
    if (c != 1) out += mag + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

/// Polynomial with integer coefficients; holds every q-analog value.
using QPoly = DensePoly<BigInt>;

/// Polynomial with rational coefficients; the components of RatFunc.
using RatPoly = DensePoly<BigRat>;

RatPoly to_rat_poly(const QPoly& p);

/// The integer polynomial equal to p, or nullopt if some coefficient is not integral.
std::optional<QPoly> to_integer_poly(const RatPoly& p);

/// Euclidean division over Q. Throws DivisionByZero for a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

RatPoly make_monic(const RatPoly& p);

/// Exact value of an integer polynomial at a rational point.
BigRat poly_eval_rat(const QPoly& p, const BigRat& x);

}  // namespace kostant
