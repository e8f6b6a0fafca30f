#include "kostant/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kostant/errors.hpp"

namespace kostant {

char to_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

std::optional<LieType> parse_lie_type(std::string_view s) {
  if (s.size() != 1) return std::nullopt;
  switch (s[0]) {
    case 'A': case 'a': return LieType::A;
    case 'B': case 'b': return LieType::B;
    case 'C': case 'c': return LieType::C;
    case 'D': case 'd': return LieType::D;
    default: return std::nullopt;
  }
}

int min_rank(LieType t) {
  switch (t) {
    case LieType::A: return 1;
    case LieType::B: return 2;
    case LieType::C: return 3;
    case LieType::D: return 4;
  }
  return 1;
}

void check_rank(LieType t, int r) {
  if (r < min_rank(t))
    throw RankTooSmall("rank too small: type " + std::string(1, to_char(t)) + " needs r >= " +
                       std::to_string(min_rank(t)) + ", got " + std::to_string(r));
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Weight::has_negative() const {
  return std::any_of(c_.begin(), c_.end(), [](int x) { return x < 0; });
}

int Weight::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Weight::fits_in(const Weight& other) const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (rhs.rank() != rank()) throw DimensionMismatch("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (rhs.rank() != rank()) throw DimensionMismatch("weight rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

namespace {

/*
 * Simple roots in orthogonal coordinates (Bourbaki):
 *   A_r: alpha_i = e_i - e_{i+1}, i <= r, in R^{r+1}
 *   B_r: alpha_i = e_i - e_{i+1} (i < r), alpha_r = e_r
 *   C_r: alpha_i = e_i - e_{i+1} (i < r), alpha_r = 2 e_r
 *   D_r: alpha_i = e_i - e_{i+1} (i < r), alpha_r = e_{r-1} + e_r
 * Inverting these gives the simple-root coefficients as partial sums S_k of
 * the orthogonal coordinates, with halving at the tail for C and D.
 */
Weight to_simple_coordinates(LieType t, int r, const std::vector<int>& v) {
  std::vector<int> partial(v.size());
  std::partial_sum(v.begin(), v.end(), partial.begin());
  std::vector<int> c(static_cast<std::size_t>(r));
  const auto n = static_cast<std::size_t>(r);
  auto half = [](int x) {
    if (x % 2 != 0) throw std::logic_error("non-integral simple-root coordinate");
    return x / 2;
  };
  switch (t) {
    case LieType::A:
    case LieType::B:
      for (std::size_t k = 0; k < n; ++k) c[k] = partial[k];
      break;
    case LieType::C:
      for (std::size_t k = 0; k + 1 < n; ++k) c[k] = partial[k];
      c[n - 1] = half(partial[n - 1]);
      break;
    case LieType::D:
      for (std::size_t k = 0; k + 2 < n; ++k) c[k] = partial[k];
      c[n - 2] = half(partial[n - 2] - v[n - 1]);
      c[n - 1] = half(partial[n - 2] + v[n - 1]);
      break;
  }
  return Weight(std::move(c));
}

}  // namespace

RootSystem build_root_system(LieType t, int r) {
  check_rank(t, r);
  const int dim = t == LieType::A ? r + 1 : r;
  std::vector<Weight> roots;
  auto add = [&](std::vector<int> v) { roots.push_back(to_simple_coordinates(t, r, v)); };
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      std::vector<int> v(static_cast<std::size_t>(dim), 0);
      v[i] = 1;
      v[j] = -1;
      add(v);  // e_i - e_j
      if (t != LieType::A) {
        v[j] = 1;
        add(v);  // e_i + e_j
      }
    }
    if (t == LieType::B || t == LieType::C) {
      std::vector<int> v(static_cast<std::size_t>(dim), 0);
      v[i] = t == LieType::B ? 1 : 2;
      add(v);  // e_i or 2 e_i
    }
  }
  std::sort(roots.begin(), roots.end());
  return RootSystem{t, r, std::move(roots), highest_root(t, r)};
}

Weight highest_root(LieType t, int r) {
  check_rank(t, r);
  const auto n = static_cast<std::size_t>(r);
  std::vector<int> c(n, 1);
  switch (t) {
    case LieType::A:
      break;
    case LieType::B:
      std::fill(c.begin() + 1, c.end(), 2);
      break;
    case LieType::C:
      std::fill(c.begin(), c.end() - 1, 2);
      break;
    case LieType::D:
      std::fill(c.begin() + 1, c.end() - 2, 2);
      break;
  }
  return Weight(std::move(c));
}

std::size_t expected_root_count(LieType t, int r) {
  const auto n = static_cast<std::size_t>(r);
  switch (t) {
    case LieType::A: return n * (n + 1) / 2;
    case LieType::B:
    case LieType::C: return n * n;
    case LieType::D: return n * (n - 1);
  }
  return 0;
}

}  // namespace kostant
