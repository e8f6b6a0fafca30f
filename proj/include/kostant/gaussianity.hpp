#pragma once

#include <string>
#include <vector>

#include "kostant/closed_form.hpp"
#include "kostant/poly.hpp"

namespace kostant {

struct MgfError {
  double t;
  double log_mgf;  // log M_{Y'}(t)
  double error;    // |log M_{Y'}(t) - t^2/2|
};

/// Convergence diagnostics of the standardized part count Y' = (Y - mean)/sd.
struct DistSummary {
  int rank = 0;
  LieType lie_type = LieType::A;
  BigRat mean;
  BigRat variance;
  double ks = 0;  // continuity-corrected Kolmogorov-Smirnov distance to N(0,1)
  double skewness = 0;
  double excess_kurtosis = 0;
  std::vector<MgfError> mgf_errors;

  double max_mgf_error() const;
};

/// Exact raw power sums sum_k k^j [g]_k for j = 0..order.
std::vector<BigInt> power_sums(const QPoly& g, int order);

/// Exact central moments E[(Y - mean)^j], j = 0..order.
std::vector<BigRat> central_moments(const QPoly& g, int order);

double normal_cdf(double x);

/// log M_{Y'}(t) = log g(e^{t/sd}) - log g(1) - t mean/sd.
double log_mgf(const QPoly& g, double t);

/// Throws DegenerateDistribution when the variance is zero.
DistSummary summarize(const QPoly& g, const std::vector<double>& t_grid);

enum class FamilyKind { HighestRoot, Theorem1 };

/// A rank-indexed sequence of weights: the highest root, or the product-formula
/// weight with support {2, 4, ..., 2l} and a common multiplicity.
struct Family {
  FamilyKind kind = FamilyKind::HighestRoot;
  LieType lie_type = LieType::A;
  std::size_t ell = 0;
  int multiplicity = 1;

  std::string name() const;
};

int family_min_rank(const Family& f);
SupportSpec family_spec(const Family& f, int rank);
QPoly family_polynomial(const Family& f, int rank);

/// One summary per rank, in input order. Ranks are evaluated in parallel.
std::vector<DistSummary> convergence_sweep(const Family& f, const std::vector<int>& ranks,
                                           const std::vector<double>& t_grid);

}  // namespace kostant
