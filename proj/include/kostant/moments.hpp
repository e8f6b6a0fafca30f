#pragma once

#include "kostant/closed_form.hpp"
#include "kostant/poly.hpp"
#include "kostant/root5.hpp"

namespace kostant {

struct MomentPair {
  BigRat mean;
  BigRat variance;
  friend bool operator==(const MomentPair&, const MomentPair&) = default;
};

/// Mean g'(1)/g(1) and variance (y g'(y))'|_{y=1} / g(1) - mean^2 of the
/// part-count distribution with generating polynomial g.
MomentPair moments_from_poly(const QPoly& g);

/// (r+1)/2 - l/5 + m and (r-1)/4 + 3l/50.
MomentPair theorem1_moments(const SupportSpec& spec);

struct ClosedMoments {
  Root5 mean;
  Root5 variance;
};

/*
 * Closed forms in Q(sqrt 5), evaluated exactly. Type A uses (r+1)/2 and
 * (r-1)/4. The type-B variance takes (5 - 3 sqrt 5) in its denominator, the
 * factor appearing in the mean; a variant with (5 - sqrt 3) in that place is
 * kept in b_variance_with_sqrt3() for comparison.
 */
ClosedMoments closed_moments(LieType t, int r);

/// closed_moments with both components checked rational; throws NonRationalResult.
MomentPair closed_moments_rational(LieType t, int r);

/// The type-B variance with (5 - sqrt 3) in place of (5 - 3 sqrt 5), in long double. Not exact.
long double b_variance_with_sqrt3(int r);

/// Slope of the mean in r for B, C and D: (13 + 5 sqrt 5) / (5 (3 + sqrt 5)).
Root5 mean_growth_rate();

}  // namespace kostant
