#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kostant {

enum class LieType { A, B, C, D };

char to_char(LieType t);
std::optional<LieType> parse_lie_type(std::string_view s);

/// Smallest admissible rank: A 1, B 2, C 3, D 4.
int min_rank(LieType t);

/// Throws RankTooSmall unless r satisfies the type's rank constraint.
void check_rank(LieType t, int r);

/// Integer coefficient vector over the simple roots; index i holds the
/// coefficient of alpha_{i+1}.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  Weight(std::initializer_list<int> coeffs) : c_(coeffs) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }

  std::size_t rank() const noexcept { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool has_negative() const;
  int height() const;  // sum of coefficients

  /// Componentwise a <= b.
  bool fits_in(const Weight& other) const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// Comma-separated coefficients.
  std::string to_string() const;

 private:
  std::vector<int> c_;
};

/// Positive roots of a classical system, in simple-root coordinates, sorted lexicographically.
struct RootSystem {
  LieType lie_type;
  int rank;
  std::vector<Weight> positive_roots;
  Weight highest_root;

  std::string name() const { return std::string(1, to_char(lie_type)) + std::to_string(rank); }
};

RootSystem build_root_system(LieType t, int r);
Weight highest_root(LieType t, int r);

/// |Phi+| = r(r+1)/2, r^2, r^2, r(r-1).
std::size_t expected_root_count(LieType t, int r);

}  // namespace kostant
