#pragma once

// Seeded random generators for the property tests.

#include <random>

#include "kostant/poly.hpp"
#include "kostant/quad_ext.hpp"
#include "kostant/root5.hpp"

namespace kostant::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long small_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline BigRat small_rat() {
  long den = small_int(1, 6);
  return make_rat(small_int(-9, 9), den);
}

inline QPoly random_qpoly(int max_degree = 5) {
  std::vector<BigInt> c;
  for (long i = small_int(0, max_degree + 1); i > 0; --i) c.emplace_back(small_int(-20, 20));
  return QPoly(std::move(c));
}

inline RatPoly random_ratpoly(int max_degree = 3) {
  std::vector<BigRat> c;
  for (long i = small_int(0, max_degree + 1); i > 0; --i) c.push_back(small_rat());
  return RatPoly(std::move(c));
}

inline RatFunc random_ratfunc() {
  RatPoly den;
  while (den.is_zero()) den = random_ratpoly(2);
  return RatFunc(random_ratpoly(3), den);
}

inline QuadExt random_quadext() { return {random_ratfunc(), random_ratfunc()}; }

inline Root5 random_root5() { return {small_rat(), small_rat()}; }

}  // namespace kostant::testing
