#pragma once

#include <string>
#include <vector>

#include "kostant/poly.hpp"
#include "kostant/root5.hpp"
#include "kostant/root_system.hpp"

namespace kostant {

struct SupportEntry {
  int index;         // 1-based simple-root index
  int multiplicity;  // extra copies of alpha_index, >= 1
  friend bool operator==(const SupportEntry&, const SupportEntry&) = default;
};

/*
 * A member of the weight family sum_i alpha_i + sum_{j} c_j alpha_{i_j}
 * with nonconsecutive interior indices. Type A needs 1 < i_1 and i_l < r;
 * B, C and D need r >= 5, 1 < i_1 and i_l < r - 2.
 */
struct SupportSpec {
  LieType lie_type = LieType::A;
  int rank = 1;
  std::vector<SupportEntry> support;

  std::size_t ell() const noexcept { return support.size(); }
  long total_multiplicity() const noexcept;  // m
};

/// Throws InvalidSupport (or RankTooSmall) when the spec is outside the family.
void validate(const SupportSpec& spec);

/// Parses "i:c,i:c"; an empty string is the empty support.
std::vector<SupportEntry> parse_support(const std::string& text);

Weight weight_of(const SupportSpec& spec);

/// q^{m+1} (1+q)^{r-1-2l} (2+2q+q^2)^l, expanded.
QPoly theorem1_qpoly(const SupportSpec& spec);

/// Every valid spec of the given type and rank with l <= max_ell and all
/// multiplicities in [1, max_mult], in a deterministic order.
std::vector<SupportSpec> enumerate_specs(LieType t, int rank, std::size_t max_ell, int max_mult);

/// Bivariate generating function sum_r P_r(q) x^r = N(x, q) / (1 - a(q) x + b(q) x^2).
struct GeneratingFunction {
  LieType lie_type;
  int start_rank;
  std::vector<QPoly> numerator;  // index = power of x
};

/// 2 + 2q + q^2
const QPoly& gf_linear_coefficient();
/// 1 + 2q + q^2 + q^3
const QPoly& gf_quadratic_coefficient();

/// The closed generating function for B, C or D. Throws std::invalid_argument for A.
const GeneratingFunction& generating_function(LieType t);

/// Coefficients P_0 .. P_{r_max} of the type's series. Seeds come from exact
/// series division, the rest from the order-two linear recurrence.
std::vector<QPoly> gf_coefficients(LieType t, int r_max);

/// Coefficient of x^r; r >= 1 for B and C, r >= 4 for D.
QPoly gf_coefficient(LieType t, int r);

/// Highest-root q-analog from the explicit formulas in Q(q)[sqrt(q^2+4)].
/// Valid for A r >= 1, B r >= 2, C r >= 1, D r >= 4.
QPoly hio_explicit(LieType t, int r);

struct BenderReport {
  LieType lie_type;
  Root5 smaller_root;
  Root5 larger_root;
  bool roots_annihilate_denominator = false;
  bool roots_distinct = false;
  bool vieta_ok = false;  // sum 1, product 1/5
  Root5 numerator_at_smaller_root;
  bool numerator_nonzero = false;

  bool passed() const { return roots_annihilate_denominator && roots_distinct && vieta_ok && numerator_nonzero; }
};

/// Exact check of the denominator roots of P(z, 1) and of the numerator at the smaller root.
BenderReport check_bender_conditions(LieType t);

}  // namespace kostant
