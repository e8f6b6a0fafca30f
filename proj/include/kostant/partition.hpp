#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kostant/poly.hpp"
#include "kostant/root_system.hpp"

namespace kostant {

/*
 * Computes the q-analog of Kostant's partition function for one target
 * weight. Positive roots are folded in one at a time, in the system's sorted
 * order, each with unbounded multiplicity, so every decomposition is counted
 * once as a multiset. The memo is keyed on (root index, residual weight).
 */
class DecompositionCounter {
 public:
  DecompositionCounter(const RootSystem& system, Weight target);

  /// Coefficient of q^k = number of multisets of k positive roots summing to the target.
  QPoly compute();

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const QPoly& solve(std::size_t root, const Weight& residual);
  std::uint64_t key(std::size_t root, const Weight& residual) const;

  Weight target_;
  std::vector<Weight> roots_;              // roots that fit inside the target
  std::vector<std::vector<bool>> covers_;  // covers_[i][j]: some root >= i is nonzero at j
  std::vector<std::uint64_t> radix_;
  std::unordered_map<std::uint64_t, QPoly> memo_;
  bool negative_ = false;
};

/// The q-analog; 1 for the zero weight, 0 when the weight has a negative entry
/// or no decomposition. Throws DimensionMismatch if the ranks differ.
QPoly qanalog(const RootSystem& system, const Weight& target);

/// Total number of decompositions, i.e. qanalog at q = 1.
BigInt count_decompositions(const RootSystem& system, const Weight& target);

}  // namespace kostant
