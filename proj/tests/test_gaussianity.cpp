#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "kostant/errors.hpp"
#include "kostant/gaussianity.hpp"
#include "kostant/moments.hpp"

using namespace kostant;

namespace {

const std::vector<double> kGrid{-1.0, -0.5, 0.5, 1.0};

QPoly binomial_shifted(int r) { return pow(QPoly{1, 1}, static_cast<unsigned long>(r - 1)).shifted(1); }

// E[(Y - mu)^j] in long double by direct summation over the normalized coefficients.
long double direct_central(const QPoly& g, int j) {
  const auto c = g.coeffs();
  long double total = 0, first = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    total += c[k].get_d();
    first += c[k].get_d() * static_cast<long double>(k);
  }
  const long double mu = first / total;
  long double acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    acc += c[k].get_d() / total * std::pow(static_cast<long double>(k) - mu, j);
  return acc;
}

}  // namespace

TEST_CASE("summary examples") {
  const DistSummary a3 = summarize(binomial_shifted(3), kGrid);
  CHECK(a3.skewness == 0.0);
  CHECK(a3.mean == 2);
  CHECK(a3.variance == BigRat(1, 2));
  // q (1+q)^{r-1} has excess kurtosis -2/(r-1).
  for (int r : {3, 10, 41}) CHECK(summarize(binomial_shifted(r), {}).excess_kurtosis == doctest::Approx(-2.0 / (r - 1)));
  CHECK(summarize(binomial_shifted(401), kGrid).ks < 0.05);
  CHECK_THROWS_AS(summarize(QPoly::monomial(BigInt(3), 4), kGrid), DegenerateDistribution);
  CHECK_THROWS_AS(summarize(QPoly{}, kGrid), ZeroDistribution);
}

TEST_CASE("normal_cdf reference values") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429));
  CHECK(normal_cdf(-1.96) == doctest::Approx(0.024997895148220435));
  CHECK(normal_cdf(-40.0) >= 0.0);
}

TEST_CASE("exact central moments match direct summation") {
  for (LieType t : {LieType::B, LieType::C, LieType::D}) {
    const auto series = gf_coefficients(t, 50);
    for (int r = min_rank(t); r <= 50; ++r) {
      const QPoly& g = series[static_cast<std::size_t>(r)];
      const auto cm = central_moments(g, 4);
      CHECK(cm[0] == 1);
      CHECK(cm[1] == 0);
      CHECK(cm[2] == moments_from_poly(g).variance);
      for (int j = 2; j <= 4; ++j) {
        const long double direct = direct_central(g, j);
        CHECK(cm[static_cast<std::size_t>(j)].get_d() == doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("standardized statistics do not depend on scaling g") {
  const QPoly g = gf_coefficient(LieType::C, 30);
  const QPoly g7 = g * QPoly{7};
  const DistSummary a = summarize(g, kGrid);
  const DistSummary b = summarize(g7, kGrid);
  CHECK(a.mean == b.mean);
  CHECK(a.variance == b.variance);
  CHECK(a.ks == doctest::Approx(b.ks));
  CHECK(a.skewness == doctest::Approx(b.skewness));
  CHECK(a.excess_kurtosis == doctest::Approx(b.excess_kurtosis));
  for (std::size_t i = 0; i < kGrid.size(); ++i)
    CHECK(a.mgf_errors[i].log_mgf == doctest::Approx(b.mgf_errors[i].log_mgf));
}

TEST_CASE("log_mgf near zero behaves like t^2/2") {
  for (int r : {20, 80, 320}) {
    const QPoly g = gf_coefficient(LieType::C, r);
    const double t = 1e-3;
    CHECK(log_mgf(g, t) / (t * t) == doctest::Approx(0.5).epsilon(1e-3));
  }
  CHECK(log_mgf(binomial_shifted(50), 0.0) == 0.0);
  // Large t must not overflow.
  CHECK(std::isfinite(log_mgf(gf_coefficient(LieType::B, 300), 60.0)));
}

TEST_CASE("convergence sweeps") {
  SUBCASE("type A highest root, KS decreasing") {
    const auto s = convergence_sweep({FamilyKind::HighestRoot, LieType::A}, {25, 100, 400}, kGrid);
    REQUIRE(s.size() == 3);
    CHECK(s[0].rank == 25);
    CHECK(s[1].ks < s[0].ks);
    CHECK(s[2].ks < s[1].ks);
  }
  SUBCASE("type C highest root, MGF error decreasing") {
    const auto s = convergence_sweep({FamilyKind::HighestRoot, LieType::C}, {10, 40, 160}, kGrid);
    CHECK(s[1].max_mgf_error() < s[0].max_mgf_error());
    CHECK(s[2].max_mgf_error() < s[1].max_mgf_error());
  }
  SUBCASE("product-formula family, skewness shrinks") {
    const Family f{FamilyKind::Theorem1, LieType::B, 3, 2};
    const auto s = convergence_sweep(f, {11, 41}, kGrid);
    CHECK(std::abs(s[1].skewness) < std::abs(s[0].skewness));
  }
  SUBCASE("every type gets closer to normal as r grows") {
    for (LieType t : {LieType::B, LieType::C, LieType::D}) {
      const auto s = convergence_sweep({FamilyKind::HighestRoot, t}, {10, 40, 160, 640}, kGrid);
      for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s[i].ks < s[i - 1].ks);
        CHECK(std::abs(s[i].skewness) < std::abs(s[i - 1].skewness));
        CHECK(std::abs(s[i].excess_kurtosis) < std::abs(s[i - 1].excess_kurtosis));
        CHECK(s[i].max_mgf_error() < s[i - 1].max_mgf_error());
      }
    }
  }
  SUBCASE("ranks below the family minimum are rejected") {
    CHECK_THROWS_AS(convergence_sweep({FamilyKind::HighestRoot, LieType::D}, {3, 10}, kGrid), RankTooSmall);
    CHECK_THROWS_AS(convergence_sweep({FamilyKind::Theorem1, LieType::B, 3, 1}, {8}, kGrid), RankTooSmall);
  }
}

TEST_CASE("family helpers") {
  const Family f{FamilyKind::Theorem1, LieType::C, 2, 3};
  CHECK(f.name() == "C-theorem1-l2-c3");
  CHECK(family_min_rank(f) == 7);
  CHECK(family_min_rank({FamilyKind::Theorem1, LieType::A, 2, 1}) == 5);
  CHECK(family_min_rank({FamilyKind::HighestRoot, LieType::D}) == 4);
  const SupportSpec spec = family_spec(f, 9);
  CHECK(spec.support == std::vector<SupportEntry>{{2, 3}, {4, 3}});
  CHECK(family_polynomial(f, 9) == theorem1_qpoly(spec));
  CHECK(family_polynomial({FamilyKind::HighestRoot, LieType::B}, 6) == gf_coefficient(LieType::B, 6));
}

TEST_CASE("sweep results do not depend on the thread count") {
  const Family f{FamilyKind::HighestRoot, LieType::D};
  const std::vector<int> ranks{4, 9, 17, 33, 65};
  ::setenv("KOSTANT_THREADS", "1", 1);
  const auto a = convergence_sweep(f, ranks, kGrid);
  ::setenv("KOSTANT_THREADS", "4", 1);
  const auto b = convergence_sweep(f, ranks, kGrid);
  ::unsetenv("KOSTANT_THREADS");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].rank == ranks[i]);
    CHECK(a[i].ks == b[i].ks);
    CHECK(a[i].max_mgf_error() == b[i].max_mgf_error());
  }
}
