#include "kostant/gaussianity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kostant/errors.hpp"
#include "kostant/moments.hpp"
#include "kostant/parallel.hpp"

namespace kostant {

double DistSummary::max_mgf_error() const {
  double m = 0;
  for (const auto& e : mgf_errors) m = std::max(m, e.error);
  return m;
}

std::vector<BigInt> power_sums(const QPoly& g, int order) {
  std::vector<BigInt> sums(static_cast<std::size_t>(order) + 1, BigInt(0));
  const auto coeffs = g.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    BigInt term = coeffs[k];
    for (auto& s : sums) {
      s += term;
      term *= static_cast<unsigned long>(k);
    }
  }
  return sums;
}

std::vector<BigRat> central_moments(const QPoly& g, int order) {
  const auto raw_sums = power_sums(g, order);
  if (raw_sums[0] == 0) throw ZeroDistribution("g(1) = 0");
  std::vector<BigRat> raw;
  for (const auto& s : raw_sums) raw.push_back(make_rat(s, raw_sums[0]));
  const BigRat mean = raw.size() > 1 ? raw[1] : BigRat(0);
  // E[(Y - mu)^j] = sum_i C(j, i) E[Y^i] (-mu)^{j-i}
  std::vector<BigRat> out;
  for (int j = 0; j <= order; ++j) {
    BigRat acc = 0;
    BigInt binom = 1;
    for (int i = 0; i <= j; ++i) {
      BigRat term = raw[static_cast<std::size_t>(i)] * binom;
      for (int e = 0; e < j - i; ++e) term *= -mean;
      acc += term;
      binom = binom * (j - i) / (i + 1);
    }
    out.push_back(acc);
  }
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

namespace {

struct Normalized {
  std::vector<double> p;  // p_k
  double mean;
  double sd;
};

Normalized normalize(const QPoly& g) {
  const auto coeffs = g.coeffs();
  const MomentPair mp = moments_from_poly(g);
  if (mp.variance == 0) throw DegenerateDistribution("variance is zero: " + g.to_string());
  BigInt total = 0;
  for (const auto& c : coeffs) total += c;
  Normalized n;
  n.p.reserve(coeffs.size());
  for (const auto& c : coeffs) n.p.push_back(make_rat(c, total).get_d());
  n.mean = mp.mean.get_d();
  n.sd = std::sqrt(mp.variance.get_d());
  return n;
}

// Centered so the first-order terms cancel in exact arithmetic:
// M(t) = sum_k p_k exp((k - mean) t/sd), log M = log1p(sum_k p_k expm1(...)).
double log_mgf_normalized(const Normalized& n, double t) {
  const double step = t / n.sd;
  double excess = 0;
  for (std::size_t k = 0; k < n.p.size(); ++k) {
    if (n.p[k] == 0) continue;
    excess += n.p[k] * std::expm1((static_cast<double>(k) - n.mean) * step);
  }
  if (std::isfinite(excess)) return std::log1p(excess);
  // Overflowing exponentials: log-sum-exp over log p_k + (k - mean) t/sd.
  double peak = -INFINITY;
  for (std::size_t k = 0; k < n.p.size(); ++k)
    if (n.p[k] > 0) peak = std::max(peak, std::log(n.p[k]) + (static_cast<double>(k) - n.mean) * step);
  double acc = 0;
  for (std::size_t k = 0; k < n.p.size(); ++k)
    if (n.p[k] > 0) acc += std::exp(std::log(n.p[k]) + (static_cast<double>(k) - n.mean) * step - peak);
  return peak + std::log(acc);
}

}  // namespace

double log_mgf(const QPoly& g, double t) { return log_mgf_normalized(normalize(g), t); }

DistSummary summarize(const QPoly& g, const std::vector<double>& t_grid) {
  const Normalized n = normalize(g);
  DistSummary s;
  const MomentPair mp = moments_from_poly(g);
  s.mean = mp.mean;
  s.variance = mp.variance;

  // KS against Phi((k + 1/2 - mean)/sd), right-closed empirical CDF.
  const auto coeffs = g.coeffs();
  BigInt total = 0;
  for (const auto& c : coeffs) total += c;
  BigInt running = 0;
  double ks = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    running += coeffs[k];
    const double emp = make_rat(running, total).get_d();
    const double model = normal_cdf((static_cast<double>(k) + 0.5 - n.mean) / n.sd);
    ks = std::max(ks, std::abs(emp - model));
  }
  s.ks = std::clamp(ks, 0.0, 1.0);

  const auto cm = central_moments(g, 4);
  const BigRat& m2 = cm[2];
  const BigRat skew_sq = cm[3] * cm[3] / (m2 * m2 * m2);
  s.skewness = sgn(cm[3]) * std::sqrt(skew_sq.get_d());
  const BigRat kurt = cm[4] / (m2 * m2) - 3;
  s.excess_kurtosis = kurt.get_d();

  for (double t : t_grid) {
    const double lm = log_mgf_normalized(n, t);
    s.mgf_errors.push_back({t, lm, std::abs(lm - 0.5 * t * t)});
  }
  return s;
}

std::string Family::name() const {
  std::string base(1, to_char(lie_type));
  if (kind == FamilyKind::HighestRoot) return base + "-highest";
  return base + "-theorem1-l" + std::to_string(ell) + "-c" + std::to_string(multiplicity);
}

int family_min_rank(const Family& f) {
  if (f.kind == FamilyKind::HighestRoot) return min_rank(f.lie_type);
  const int span = 2 * static_cast<int>(f.ell);  // largest index used
  if (f.lie_type == LieType::A) return std::max(1, span + 1);
  return std::max(5, span + 3);
}

SupportSpec family_spec(const Family& f, int rank) {
  if (f.kind != FamilyKind::Theorem1) throw std::invalid_argument("family has no support spec");
  SupportSpec spec{f.lie_type, rank, {}};
  for (std::size_t j = 1; j <= f.ell; ++j) spec.support.push_back({static_cast<int>(2 * j), f.multiplicity});
  return spec;
}

QPoly family_polynomial(const Family& f, int rank) {
  if (f.kind == FamilyKind::Theorem1) return theorem1_qpoly(family_spec(f, rank));
  check_rank(f.lie_type, rank);
  if (f.lie_type == LieType::A) return hio_explicit(LieType::A, rank);
  return gf_coefficient(f.lie_type, rank);
}

std::vector<DistSummary> convergence_sweep(const Family& f, const std::vector<int>& ranks,
                                           const std::vector<double>& t_grid) {
  for (int r : ranks)
    if (r < family_min_rank(f))
      throw RankTooSmall("rank too small: family " + f.name() + " needs r >= " + std::to_string(family_min_rank(f)));

  // One series expansion serves every rank of a generating-function family.
  std::vector<QPoly> series;
  const bool use_series = f.kind == FamilyKind::HighestRoot && f.lie_type != LieType::A && !ranks.empty();
  if (use_series) series = gf_coefficients(f.lie_type, *std::max_element(ranks.begin(), ranks.end()));

  return parallel_map(ranks, [&](int r) {
    const QPoly g = use_series ? series[static_cast<std::size_t>(r)] : family_polynomial(f, r);
    DistSummary s = summarize(g, t_grid);
    s.rank = r;
    s.lie_type = f.lie_type;
    return s;
  });
}

}  // namespace kostant
