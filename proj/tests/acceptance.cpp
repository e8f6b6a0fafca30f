// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "kostant/closed_form.hpp"
#include "kostant/gaussianity.hpp"
#include "kostant/moments.hpp"
#include "kostant/parallel.hpp"
#include "kostant/partition.hpp"
#include "output.hpp"

using namespace kostant;

namespace {

constexpr LieType kAllTypes[] = {LieType::A, LieType::B, LieType::C, LieType::D};
constexpr LieType kGfTypes[] = {LieType::B, LieType::C, LieType::D};

struct Verdict {
  bool ok = true;
  std::string detail;
};

std::string tname(LieType t) { return std::string(1, to_char(t)); }

struct SuiteItem {
  LieType type;
  int rank;
};

// Every (type, rank) of the product-formula suite: valid ranks up to 10.
std::vector<SuiteItem> suite_items() {
  std::vector<SuiteItem> items;
  for (LieType t : kAllTypes)
    for (int r = min_rank(t); r <= 10; ++r) items.push_back({t, r});
  return items;
}

BigInt expected_count(int r, std::size_t ell) {
  BigInt v = BigInt(1) << static_cast<mp_bitcnt_t>(r - 1 - 2 * static_cast<int>(ell));
  BigInt five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, ell);
  return v * five;
}

Verdict criterion_theorem1() {
  const auto items = suite_items();
  const auto bad = parallel_map(items, [](const SuiteItem& it) {
    const RootSystem sys = build_root_system(it.type, it.rank);
    std::pair<std::size_t, std::string> res{0, ""};
    for (const auto& spec : enumerate_specs(it.type, it.rank, 2, 3)) {
      ++res.first;
      if (res.second.empty() && qanalog(sys, weight_of(spec)) != theorem1_qpoly(spec))
        res.second = sys.name() + " " + weight_of(spec).to_string();
    }
    return res;
  });
  std::size_t n = 0;
  for (const auto& [count, failure] : bad) {
    n += count;
    if (!failure.empty()) return {false, "mismatch at " + failure};
  }
  return {true, std::to_string(n) + " supports, all types, r <= 10, l <= 2, c <= 3"};
}

Verdict criterion_routes() {
  for (LieType t : kGfTypes) {
    const auto series = gf_coefficients(t, 60);
    for (int r = min_rank(t); r <= 10; ++r) {
      const RootSystem sys = build_root_system(t, r);
      const QPoly oracle = qanalog(sys, sys.highest_root);
      if (oracle != series[static_cast<std::size_t>(r)] || oracle != hio_explicit(t, r))
        return {false, "routes disagree at " + sys.name()};
    }
    for (int r = min_rank(t); r <= 60; ++r)
      if (series[static_cast<std::size_t>(r)] != hio_explicit(t, r))
        return {false, "gf != hio at " + tname(t) + std::to_string(r)};
  }
  return {true, "oracle = gf = hio up to r = 10; gf = hio up to r = 60"};
}

Verdict criterion_counts() {
  for (int r = 1; r <= 20; ++r) {
    const RootSystem sys = build_root_system(LieType::A, r);
    if (qanalog(sys, sys.highest_root) != pow(QPoly{1, 1}, static_cast<unsigned long>(r - 1)).shifted(1))
      return {false, "A highest root differs at r = " + std::to_string(r)};
  }
  std::size_t n = 0;
  for (const auto& it : suite_items()) {
    const RootSystem sys = build_root_system(it.type, it.rank);
    for (const auto& spec : enumerate_specs(it.type, it.rank, 2, 3)) {
      ++n;
      if (count_decompositions(sys, weight_of(spec)) != expected_count(it.rank, spec.ell()))
        return {false, "count differs at " + sys.name() + " " + weight_of(spec).to_string()};
    }
  }
  return {true, "A_r identity for r <= 20; 2^(r-1-2l) 5^l for " + std::to_string(n) + " supports"};
}

Verdict criterion_moments() {
  std::size_t n = 0;
  for (const auto& it : suite_items())
    for (const auto& spec : enumerate_specs(it.type, it.rank, 2, 3)) {
      ++n;
      if (theorem1_moments(spec) != moments_from_poly(theorem1_qpoly(spec)))
        return {false, "theorem1 moments differ for " + tname(it.type) + std::to_string(it.rank)};
    }
  double sqrt3_dev = 0;
  for (LieType t : kGfTypes) {
    const auto series = gf_coefficients(t, 30);
    for (int r = min_rank(t); r <= 30; ++r) {
      const MomentPair poly = moments_from_poly(series[static_cast<std::size_t>(r)]);
      const MomentPair closed = closed_moments_rational(t, r);
      if (closed.mean != poly.mean) return {false, "closed mean differs at " + tname(t) + std::to_string(r)};
      if (closed.variance != poly.variance)
        return {false, "closed variance differs at " + tname(t) + std::to_string(r)};
      if (t == LieType::B)
        sqrt3_dev = std::max(sqrt3_dev, std::abs(static_cast<double>(b_variance_with_sqrt3(r)) - poly.variance.get_d()));
    }
  }
  return {true, std::to_string(n) + " supports; B/C/D closed means and variances exact for r <= 30" +
                    " (WARN: sqrt 3 form of the B variance off by up to " + cli::format_real(sqrt3_dev) + ")"};
}

Verdict criterion_root_counts() {
  for (LieType t : kAllTypes)
    for (int r = min_rank(t); r <= 30; ++r) {
      const std::size_t got = build_root_system(t, r).positive_roots.size();
      const auto rr = static_cast<std::size_t>(r);
      std::size_t want = 0;
      switch (t) {
        case LieType::A: want = rr * (rr + 1) / 2; break;
        case LieType::B:
        case LieType::C: want = rr * rr; break;
        case LieType::D: want = rr * (rr - 1); break;
      }
      if (got != want) return {false, tname(t) + std::to_string(r) + " has " + std::to_string(got) + " roots"};
    }
  return {true, "A/B/C/D for r <= 30"};
}

Verdict criterion_gaussian() {
  std::vector<Family> families{{FamilyKind::HighestRoot, LieType::A}};
  for (LieType t : kGfTypes) families.push_back({FamilyKind::HighestRoot, t});
  for (LieType t : kAllTypes) families.push_back({FamilyKind::Theorem1, t, 3, 1});
  const std::vector<double> grid{-1.0, -0.5, 0.5, 1.0};
  const std::vector<int> ranks{20, 25, 100, 320, 400};

  double worst_ks = 0, worst_skew = 0, worst_kurt = 0, worst_mgf = 0;
  for (const Family& f : families) {
    const auto s = convergence_sweep(f, ranks, grid);
    const auto& r20 = s[0];
    const auto& r25 = s[1];
    const auto& r100 = s[2];
    const auto& r320 = s[3];
    const auto& r400 = s[4];
    const std::string fam = f.name();
    if (!(r100.ks < r25.ks && r400.ks < r100.ks)) return {false, fam + ": KS not decreasing over 25/100/400"};
    if (!(r400.ks < 0.05)) return {false, fam + ": KS(400) = " + cli::format_real(r400.ks)};
    if (!(std::abs(r400.skewness) < 0.1)) return {false, fam + ": skewness(400) = " + cli::format_real(r400.skewness)};
    if (!(std::abs(r400.excess_kurtosis) < 0.1))
      return {false, fam + ": excess kurtosis(400) = " + cli::format_real(r400.excess_kurtosis)};
    if (!(r320.max_mgf_error() < r20.max_mgf_error() && r320.max_mgf_error() < 0.05))
      return {false, fam + ": MGF error " + cli::format_real(r320.max_mgf_error()) + " at r = 320"};
    worst_ks = std::max(worst_ks, r400.ks);
    worst_skew = std::max(worst_skew, std::abs(r400.skewness));
    worst_kurt = std::max(worst_kurt, std::abs(r400.excess_kurtosis));
    worst_mgf = std::max(worst_mgf, r320.max_mgf_error());
  }
  return {true, std::to_string(families.size()) + " families; worst KS(400) " + cli::format_real(worst_ks) +
                    ", |skew(400)| " + cli::format_real(worst_skew) + ", |kurt(400)| " + cli::format_real(worst_kurt) +
                    ", MGF error(320) " + cli::format_real(worst_mgf)};
}

Verdict criterion_bender() {
  const Root5 small(BigRat(1, 2), BigRat(-1, 10));
  const Root5 large(BigRat(1, 2), BigRat(1, 10));
  for (LieType t : kGfTypes) {
    const BenderReport rep = check_bender_conditions(t);
    if (!rep.passed() || rep.smaller_root != small || rep.larger_root != large)
      return {false, "type " + tname(t) + " fails"};
  }
  return {true, "B/C/D: roots (5 -+ sqrt 5)/10, numerator nonzero at the smaller root"};
}

Verdict criterion_determinism() {
  auto once = [](const char* threads) {
    ::setenv("KOSTANT_THREADS", threads, 1);
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--max-rank", "8"}, out, err);
    ::unsetenv("KOSTANT_THREADS");
    return std::pair{code, out.str()};
  };
  const auto a = once("1");
  const auto b = once("4");
  if (a.first != 0 || b.first != 0)
    return {false, "verify exit codes " + std::to_string(a.first) + ", " + std::to_string(b.first)};
  if (a.second != b.second) return {false, "outputs differ"};
  return {true, "two runs byte-identical (" + std::to_string(a.second.size()) + " bytes), exit 0"};
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 for none
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oracle equals the product formula", 60, criterion_theorem1},
      {2, "highest-root routes agree", 60, criterion_routes},
      {3, "counting identities", 0, criterion_counts},
      {4, "moment identities", 0, criterion_moments},
      {5, "positive root counts", 0, criterion_root_counts},
      {6, "Gaussian convergence", 300, criterion_gaussian},
      {7, "generating-function singularities", 0, criterion_bender},
      {8, "verify is deterministic", 0, criterion_determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      v.ok = false;
      v.detail += "; over the time budget";
    }
    all = all && v.ok;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.ok ? "PASS" : "FAIL", c.id, c.title, v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
