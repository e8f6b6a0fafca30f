#include "kostant/closed_form.hpp"

#include <charconv>
#include <stdexcept>

#include "kostant/errors.hpp"
#include "kostant/quad_ext.hpp"

namespace kostant {

long SupportSpec::total_multiplicity() const noexcept {
  long m = 0;
  for (const auto& e : support) m += e.multiplicity;
  return m;
}

void validate(const SupportSpec& spec) {
  check_rank(spec.lie_type, spec.rank);
  const int r = spec.rank;
  const bool type_a = spec.lie_type == LieType::A;
  if (!type_a && r < 5)
    throw InvalidSupport("type " + std::string(1, to_char(spec.lie_type)) +
                         " weight family needs rank >= 5, got " + std::to_string(r));
  const int upper = type_a ? r : r - 2;  // exclusive bound on indices
  int prev = -1;
  for (const auto& e : spec.support) {
    if (e.multiplicity < 1)
      throw InvalidSupport("multiplicity at index " + std::to_string(e.index) + " must be >= 1");
    if (e.index <= 1 || e.index >= upper)
      throw InvalidSupport("index " + std::to_string(e.index) + " outside (1, " + std::to_string(upper) + ")");
    if (prev >= 0 && e.index < prev + 2)
      throw InvalidSupport("indices must be increasing and nonconsecutive (" + std::to_string(prev) + ", " +
                           std::to_string(e.index) + ")");
    prev = e.index;
  }
}

std::vector<SupportEntry> parse_support(const std::string& text) {
  std::vector<SupportEntry> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw InvalidSupport("support entry '" + item + "' is not i:c");
    auto parse_int = [&](std::string_view sv) {
      int v = 0;
      auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
      if (ec != std::errc() || p != sv.data() + sv.size() || sv.empty())
        throw InvalidSupport("support entry '" + item + "' is not i:c");
      return v;
    };
    std::string_view sv(item);
    out.push_back({parse_int(sv.substr(0, colon)), parse_int(sv.substr(colon + 1))});
    pos = end + 1;
  }
  return out;
}

Weight weight_of(const SupportSpec& spec) {
  validate(spec);
  Weight w(std::vector<int>(static_cast<std::size_t>(spec.rank), 1));
  for (const auto& e : spec.support) w[static_cast<std::size_t>(e.index - 1)] += e.multiplicity;
  return w;
}

QPoly theorem1_qpoly(const SupportSpec& spec) {
  validate(spec);
  const auto ell = static_cast<unsigned long>(spec.ell());
  const auto m = static_cast<std::size_t>(spec.total_multiplicity());
  const QPoly one_plus_q{1, 1};
  const QPoly quad{2, 2, 1};
  const auto linear_power = static_cast<unsigned long>(spec.rank - 1) - 2 * ell;
  return (pow(one_plus_q, linear_power) * pow(quad, ell)).shifted(m + 1);
}

std::vector<SupportSpec> enumerate_specs(LieType t, int rank, std::size_t max_ell, int max_mult) {
  std::vector<SupportSpec> out;
  if (rank < min_rank(t)) return out;
  if (t != LieType::A && rank < 5) return out;
  const int upper = t == LieType::A ? rank : rank - 2;

  // Index sets by depth-first search, then every multiplicity assignment.
  std::vector<std::vector<int>> index_sets{{}};
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int next) -> void {
    for (int i = next; i < upper; ++i) {
      cur.push_back(i);
      index_sets.push_back(cur);
      if (cur.size() < max_ell) self(self, i + 2);
      cur.pop_back();
    }
  };
  if (max_ell > 0) dfs(dfs, 2);

  for (const auto& idx : index_sets) {
    std::vector<int> mult(idx.size(), 1);
    while (true) {
      SupportSpec spec{t, rank, {}};
      for (std::size_t j = 0; j < idx.size(); ++j) spec.support.push_back({idx[j], mult[j]});
      out.push_back(std::move(spec));
      std::size_t j = 0;
      while (j < mult.size() && mult[j] == max_mult) mult[j++] = 1;
      if (j == mult.size()) break;
      ++mult[j];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generating functions

const QPoly& gf_linear_coefficient() {
  static const QPoly a{2, 2, 1};
  return a;
}

const QPoly& gf_quadratic_coefficient() {
  static const QPoly b{1, 2, 1, 1};
  return b;
}

const GeneratingFunction& generating_function(LieType t) {
  static const GeneratingFunction kB{LieType::B, 1, {QPoly{}, QPoly{0, 1}, QPoly{0, -1, -1}, QPoly{0, 0, 1}}};
  static const GeneratingFunction kC{LieType::C, 1, {QPoly{}, QPoly{0, 1}, QPoly{0, -1, -1}}};
  static const GeneratingFunction kD{
      LieType::D, 4, {QPoly{}, QPoly{}, QPoly{}, QPoly{}, QPoly{0, 1, 4, 6, 3, 1}, QPoly{0, -1, -4, -6, -5, -3, -1}}};
  switch (t) {
    case LieType::B: return kB;
    case LieType::C: return kC;
    case LieType::D: return kD;
    case LieType::A: break;
  }
  throw std::invalid_argument("no rational generating function is tabulated for type A");
}

namespace {

// First `count` coefficients of N(x)/Den(x) for Den with constant term 1.
std::vector<QPoly> series_divide(const std::vector<QPoly>& num, const std::vector<QPoly>& den, std::size_t count) {
  std::vector<QPoly> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    QPoly v = k < num.size() ? num[k] : QPoly{};
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) v -= den[j] * out[k - j];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<QPoly> gf_coefficients(LieType t, int r_max) {
  const GeneratingFunction& gf = generating_function(t);
  const std::vector<QPoly> den{QPoly::constant(1), -gf_linear_coefficient(), gf_quadratic_coefficient()};
  const std::size_t count = static_cast<std::size_t>(std::max(r_max, 0)) + 1;
  // Past the numerator's degree the series obeys the denominator's recurrence.
  const std::size_t seeds = std::min(count, gf.numerator.size() + 1);
  std::vector<QPoly> out = series_divide(gf.numerator, den, seeds);
  for (std::size_t k = seeds; k < count; ++k)
    out.push_back(gf_linear_coefficient() * out[k - 1] - gf_quadratic_coefficient() * out[k - 2]);
  return out;
}

QPoly gf_coefficient(LieType t, int r) {
  const GeneratingFunction& gf = generating_function(t);
  if (r < gf.start_rank)
    throw RankTooSmall("rank too small: generating function for type " + std::string(1, to_char(t)) +
                       " starts at r = " + std::to_string(gf.start_rank));
  return gf_coefficients(t, r)[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------
// Explicit formulas in Q(q)[s], s^2 = q^2 + 4

namespace {

RatFunc rf(std::initializer_list<long> coeffs) {
  std::vector<BigRat> v;
  for (long c : coeffs) v.emplace_back(c);
  return RatFunc(RatPoly(std::move(v)));
}

// (P + Q s) / (2 (q^2 + 4)); the minus variant is its conjugate.
QuadExt coefficient_plus(const RatFunc& p, const RatFunc& q) {
  const RatFunc denom = rf({8, 0, 2});
  return {p / denom, q / denom};
}

QuadExt beta_plus() {
  const RatFunc half = RatFunc(RatPoly::constant(BigRat(1, 2)));
  return {rf({2, 2, 1}) * half, rf({0, 1}) * half};
}

}  // namespace

QPoly hio_explicit(LieType t, int r) {
  QuadExt g_plus;
  int shift = 0;
  switch (t) {
    case LieType::A: {
      if (r < 1) throw RankTooSmall("rank too small: type A needs r >= 1");
      return pow(QPoly{1, 1}, static_cast<unsigned long>(r - 1)).shifted(1);
    }
    case LieType::B:
      shift = 2;
      g_plus = coefficient_plus(rf({0, 4, 4, 5, 1, 1}), rf({0, 2, 3, 1, 1}));
      break;
    case LieType::C:
      shift = 1;
      g_plus = coefficient_plus(rf({0, 4, 0, 1}), rf({0, 0, 1}));
      break;
    case LieType::D:
      shift = 4;
      g_plus = coefficient_plus(rf({0, 4, 16, 25, 16, 10, 3, 1}), rf({0, 2, 9, 12, 8, 3, 1}));
      break;
  }
  if (r < shift)
    throw RankTooSmall("rank too small: explicit formula for type " + std::string(1, to_char(t)) +
                       " needs r >= " + std::to_string(shift));
  const QuadExt bp = beta_plus();
  const QuadExt bm = bp.conjugate();
  const QuadExt g_minus = g_plus.conjugate();
  const auto n = static_cast<unsigned long>(r - shift);
  const QuadExt total = g_plus * pow(bp, n) + g_minus * pow(bm, n);
  if (!total.is_rational())
    throw InternalCancellationFailure("sqrt(q^2+4) part did not cancel for " + std::string(1, to_char(t)) +
                                      std::to_string(r) + ": " + total.s_part().to_string());
  const RatFunc& value = total.rational_part();
  if (!value.is_polynomial())
    throw InternalCancellationFailure("explicit formula is not a polynomial: " + value.to_string());
  auto poly = to_integer_poly(value.num());
  if (!poly) throw InternalCancellationFailure("explicit formula has non-integral coefficients: " + value.to_string());
  return *poly;
}

// ---------------------------------------------------------------------------
// Bender's conditions two and four

BenderReport check_bender_conditions(LieType t) {
  const GeneratingFunction& gf = generating_function(t);
  // P(z, 1) = 1 - a(1) z + b(1) z^2
  const BigRat one(1);
  const BigRat a1 = poly_eval_rat(gf_linear_coefficient(), one);
  const BigRat b1 = poly_eval_rat(gf_quadratic_coefficient(), one);
  const BigRat disc = a1 * a1 - 4 * b1;  // 25 - 20 = 5

  BenderReport rep{};
  rep.lie_type = t;
  if (disc != 5) return rep;  // the roots would not live in Q(sqrt 5)
  const Root5 sqrt_disc = Root5::sqrt5();
  const Root5 two_b(2 * b1);
  rep.smaller_root = (Root5(a1) - sqrt_disc) / two_b;
  rep.larger_root = (Root5(a1) + sqrt_disc) / two_b;

  auto denominator_at = [&](const Root5& z) { return Root5(1) - Root5(a1) * z + Root5(b1) * z * z; };
  rep.roots_annihilate_denominator =
      denominator_at(rep.smaller_root).is_zero() && denominator_at(rep.larger_root).is_zero();
  rep.roots_distinct = !(rep.smaller_root == rep.larger_root);
  rep.vieta_ok = rep.smaller_root + rep.larger_root == Root5(1) &&
                 rep.smaller_root * rep.larger_root == Root5(BigRat(1, 5));

  Root5 value;
  Root5 zpow(1);
  for (const auto& coeff : gf.numerator) {
    value += Root5(poly_eval_rat(coeff, one)) * zpow;
    zpow *= rep.smaller_root;
  }
  rep.numerator_at_smaller_root = value;
  rep.numerator_nonzero = !value.is_zero();
  return rep;
}

}  // namespace kostant
