#pragma once

#include <gmpxx.h>

#include <string>

#include "kostant/errors.hpp"

namespace kostant {

using BigInt = mpz_class;

/// Exact rational; GMP keeps it reduced with a positive denominator as long
/// as every construction goes through make_rat or arithmetic.
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace kostant
