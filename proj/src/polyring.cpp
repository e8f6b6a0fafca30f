#include <cmath>

#include "kostant/poly.hpp"
#include "kostant/quad_ext.hpp"
#include "kostant/ratfunc.hpp"
#include "kostant/root5.hpp"

namespace kostant {

// ---------------------------------------------------------------------------
// Polynomials

RatPoly to_rat_poly(const QPoly& p) {
  std::vector<BigRat> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

std::optional<QPoly> to_integer_poly(const RatPoly& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return QPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (num.degree() < den.degree()) return {RatPoly{}, num};
  const auto dd = static_cast<std::size_t>(den.degree());
  std::vector<BigRat> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<BigRat> quot(rem.size() - dd, BigRat(0));
  const BigRat& lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRat f = rem[k + dd] / lead;
    if (f == 0) continue;
    quot[k] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= f * den.coeffs()[j];
  }
  rem.resize(dd);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  BigRat inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

BigRat poly_eval_rat(const QPoly& p, const BigRat& x) { return p.evaluate<BigRat>(x); }

// ---------------------------------------------------------------------------
// Rational functions

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = RatPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    RatPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  BigRat inv = 1 / den_.leading();
  num_ *= inv;
  den_ *= inv;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_polynomial() && y.is_polynomial()) {
    RatFunc r;
    r.num_ = x.num_ * y.num_;
    return r;
  }
  return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
  if (y.is_zero()) throw DivisionByZero("rational function division by zero");
  return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

BigRat RatFunc::evaluate(const BigRat& q) const {
  BigRat d = den_.evaluate<BigRat>(q);
  if (d == 0) throw DivisionByZero("rational function evaluated at a pole");
  return num_.evaluate<BigRat>(q) / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Q(q)[s], s^2 = q^2 + 4

QuadExt QuadExt::s() { return {RatFunc{}, RatFunc::from_int(1)}; }

const RatFunc& QuadExt::discriminant() {
  static const RatFunc disc(RatPoly{BigRat(4), BigRat(0), BigRat(1)});
  return disc;
}

RatFunc QuadExt::norm() const { return a_ * a_ - b_ * b_ * discriminant(); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  return {x.a_ * y.a_ + x.b_ * y.b_ * QuadExt::discriminant(), x.a_ * y.b_ + x.b_ * y.a_};
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw DivisionByZero("QuadExt division by zero");
  RatFunc n = y.norm();
  QuadExt t = x * y.conjugate();
  return {t.a_ / n, t.b_ / n};
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  return "[" + a_.to_string() + "] + [" + b_.to_string() + "]*s";
}

QuadExt pow(const QuadExt& x, unsigned long k) {
  QuadExt result(RatFunc::from_int(1));
  QuadExt b = x;
  while (k > 0) {
    if (k & 1UL) result = result * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Q(sqrt 5)

Root5& Root5::operator+=(const Root5& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

Root5& Root5::operator-=(const Root5& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

Root5& Root5::operator*=(const Root5& y) {
  BigRat a = a_ * y.a_ + 5 * b_ * y.b_;
  BigRat b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Root5 operator/(const Root5& x, const Root5& y) {
  BigRat n = y.norm();
  if (n == 0) throw DivisionByZero("Root5 division by zero");
  Root5 t = x * y.conjugate();
  return {t.a_ / n, t.b_ / n};
}

int Root5::sign() const {
  // Compare a with -b*sqrt(5) by squaring when the signs differ.
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger magnitude wins.
  BigRat lhs = a_ * a_;
  BigRat rhs = 5 * b_ * b_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double Root5::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

std::string Root5::to_string() const {
  if (b_ == 0) return kostant::to_string(a_);
  std::string s = a_ == 0 ? "" : kostant::to_string(a_) + (b_ > 0 ? " + " : " - ");
  BigRat mag = abs(b_);
  if (a_ == 0 && b_ < 0) s += "-";
  return s + kostant::to_string(mag) + "*sqrt(5)";
}

Root5 pow(const Root5& x, unsigned long k) {
  Root5 result(1);
  Root5 b = x;
  while (k > 0) {
    if (k & 1UL) result *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return result;
}

BigRat require_rational(const Root5& x, const std::string& what) {
  if (!x.is_rational()) throw NonRationalResult(what + " is not rational: " + x.to_string());
  return x.rational_part();
}

}  // namespace kostant
