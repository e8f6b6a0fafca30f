#include "kostant/moments.hpp"

#include <cmath>

#include "kostant/errors.hpp"

namespace kostant {

MomentPair moments_from_poly(const QPoly& g) {
  if (g.is_zero()) throw ZeroDistribution("moments of the zero polynomial");
  const BigRat one(1);
  const QPoly d1 = g.derivative();
  // (y g'(y))' = g'(y) + y g''(y)
  const QPoly second = d1 + d1.derivative().shifted(1);
  const BigRat total = poly_eval_rat(g, one);
  if (total == 0) throw ZeroDistribution("g(1) = 0");
  BigRat mean = poly_eval_rat(d1, one) / total;
  BigRat variance = poly_eval_rat(second, one) / total - mean * mean;
  return {mean, variance};
}

MomentPair theorem1_moments(const SupportSpec& spec) {
  validate(spec);
  const BigRat r(spec.rank);
  const BigRat ell(static_cast<long>(spec.ell()));
  const BigRat m(spec.total_multiplicity());
  BigRat mean = (r + 1) / 2 - ell / 5 + m;
  BigRat variance = (r - 1) / 4 + BigRat(3, 50) * ell;
  mean.canonicalize();
  variance.canonicalize();
  return {mean, variance};
}

namespace {

struct Powers {
  Root5 minus_r;   // (5 - sqrt5)^r
  Root5 plus_r;    // (5 + sqrt5)^r
  Root5 minus_2r;  // (5 - sqrt5)^{2r}
  Root5 plus_2r;   // (5 + sqrt5)^{2r}
  Root5 twenty_r;  // 20^r
  Root5 rank;
};

Powers powers(int r) {
  const auto n = static_cast<unsigned long>(r);
  const Root5 s = Root5::sqrt5();
  Powers p;
  p.minus_r = pow(Root5(5) - s, n);
  p.plus_r = pow(Root5(5) + s, n);
  p.minus_2r = p.minus_r * p.minus_r;
  p.plus_2r = p.plus_r * p.plus_r;
  p.twenty_r = pow(Root5(20), n);
  p.rank = Root5(r);
  return p;
}

ClosedMoments type_b(const Powers& p) {
  const Root5 s = Root5::sqrt5();
  const Root5& r = p.rank;
  const Root5 twenty_r1 = p.twenty_r * Root5(20);  // 20^{r+1}

  const Root5 mean_num = (Root5(5) - s + (Root5(25) - Root5(13) * s) * r) * p.minus_r +
                         (Root5(5) + s + (Root5(25) + Root5(13) * s) * r) * p.plus_r;
  const Root5 base = (Root5(5) - Root5(3) * s) * p.minus_r + (Root5(5) + Root5(3) * s) * p.plus_r;
  const Root5 mean = mean_num / (Root5(5) * base);

  const Root5 denom = Root5(-5) * base * base;
  const Root5 quad = twenty_r1 * r * r;
  const Root5 lin = (Root5(26) * (Root5(3) * s - Root5(7)) * p.minus_2r -
                     Root5(26) * (Root5(3) * s + Root5(7)) * p.plus_2r + Root5(36) * twenty_r1 / Root5(5)) *
                    r;
  const Root5 cst = Root5(2) * (Root5(73) - Root5(25) * s) * p.minus_2r +
                    Root5(2) * (Root5(73) + Root5(25) * s) * p.plus_2r - Root5(63) * twenty_r1 / Root5(5);
  return {mean, (quad + lin) / denom + cst / denom};
}

ClosedMoments type_c(const Powers& p) {
  const Root5 s = Root5::sqrt5();
  const Root5& r = p.rank;
  const Root5 twenty_r1 = p.twenty_r * Root5(20);

  const Root5 sum = p.minus_r + p.plus_r;
  const Root5 mean_num = ((Root5(1) - s) + (Root5(7) - s) * r) * p.minus_r +
                         ((Root5(1) + s) + (Root5(7) + s) * r) * p.plus_r;
  const Root5 mean = mean_num / (Root5(10) * sum);

  const Root5 denom = Root5(25) * sum * sum;
  const Root5 quad = twenty_r1 / Root5(4) * r * r;
  const Root5 lin = (Root5(13) * (p.minus_2r + p.plus_2r) + Root5(9) * twenty_r1 / Root5(5)) * r;
  const Root5 cst = (Root5(-21) + Root5(4) * s) * p.plus_2r - (Root5(21) + Root5(4) * s) * p.minus_2r -
                    Root5(37) * p.twenty_r;
  return {mean, (quad + lin) / denom + cst / denom};
}

ClosedMoments type_d(const Powers& p) {
  const Root5 s = Root5::sqrt5();
  const Root5& r = p.rank;
  const Root5 twenty_r1 = p.twenty_r * Root5(20);

  const Root5 mean_num = (Root5(15) - s + r * (Root5(-5) + Root5(7) * s)) * p.minus_r +
                         (Root5(15) + s - r * (Root5(5) + Root5(7) * s)) * p.plus_r;
  const Root5 mean = mean_num / (Root5(10) * s * (p.minus_r - p.plus_r));

  const Root5 diff = p.plus_r - p.minus_r;
  const Root5 denom = Root5(-25) * diff * diff;
  const Root5 quad = twenty_r1 / Root5(4) * r * r;
  const Root5 lin = (Root5(13) * (p.plus_2r + p.minus_2r) + twenty_r1 / Root5(5)) * r;
  const Root5 cst = (Root5(34) - Root5(3) * s) * p.plus_2r + (Root5(34) + Root5(3) * s) * p.minus_2r -
                    Root5(23) * p.twenty_r;
  return {mean, (quad - lin) / denom + cst / denom};
}

}  // namespace

ClosedMoments closed_moments(LieType t, int r) {
  check_rank(t, r);
  if (t == LieType::A) {
    return {Root5(make_rat(r + 1, 2)), Root5(make_rat(r - 1, 4))};
  }
  const Powers p = powers(r);
  switch (t) {
    case LieType::B: return type_b(p);
    case LieType::C: return type_c(p);
    case LieType::D: return type_d(p);
    case LieType::A: break;
  }
  return {};
}

MomentPair closed_moments_rational(LieType t, int r) {
  const ClosedMoments c = closed_moments(t, r);
  const std::string tag = std::string(1, to_char(t)) + std::to_string(r);
  return {require_rational(c.mean, "closed mean for " + tag), require_rational(c.variance, "closed variance for " + tag)};
}

long double b_variance_with_sqrt3(int r) {
  check_rank(LieType::B, r);
  using ld = long double;
  const ld s5 = std::sqrt(5.0L);
  const ld s3 = std::sqrt(3.0L);
  const ld rr = r;
  const ld minus_r = std::pow(5.0L - s5, rr);
  const ld plus_r = std::pow(5.0L + s5, rr);
  const ld twenty_r1 = std::pow(20.0L, rr + 1);
  const ld base = (5.0L - s3) * minus_r + (5.0L + 3.0L * s5) * plus_r;
  const ld denom = -5.0L * base * base;
  const ld quad = twenty_r1 * rr * rr;
  const ld lin = (26.0L * (3.0L * s5 - 7.0L) * minus_r * minus_r - 26.0L * (3.0L * s5 + 7.0L) * plus_r * plus_r +
                  36.0L * twenty_r1 / 5.0L) *
                 rr;
  const ld cst = 2.0L * (73.0L - 25.0L * s5) * minus_r * minus_r + 2.0L * (73.0L + 25.0L * s5) * plus_r * plus_r -
                 63.0L * twenty_r1 / 5.0L;
  return (quad + lin) / denom + cst / denom;
}

Root5 mean_growth_rate() {
  const Root5 s = Root5::sqrt5();
  return (Root5(13) + Root5(5) * s) / (Root5(5) * (Root5(3) + s));
}

}  // namespace kostant
