#include "kostant/partition.hpp"

#include <limits>
#include <stdexcept>

#include "kostant/errors.hpp"

namespace kostant {

DecompositionCounter::DecompositionCounter(const RootSystem& system, Weight target)
    : target_(std::move(target)) {
  if (target_.rank() != static_cast<std::size_t>(system.rank))
    throw DimensionMismatch("weight has length " + std::to_string(target_.rank()) + " but " +
                            system.name() + " has rank " + std::to_string(system.rank));
  negative_ = target_.has_negative();
  if (negative_) return;

  for (const auto& root : system.positive_roots)
    if (root.fits_in(target_)) roots_.push_back(root);

  const std::size_t n = target_.rank();
  covers_.assign(roots_.size() + 1, std::vector<bool>(n, false));
  for (std::size_t i = roots_.size(); i-- > 0;) {
    covers_[i] = covers_[i + 1];
    for (std::size_t j = 0; j < n; ++j)
      if (roots_[i][j] > 0) covers_[i][j] = true;
  }

  // Mixed-radix packing of (residual, root index) into one 64-bit key.
  radix_.resize(n);
  std::uint64_t scale = roots_.size() + 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t j = 0; j < n; ++j) {
    radix_[j] = scale;
    const auto base = static_cast<std::uint64_t>(target_[j]) + 1;
    if (scale > kMax / base) throw std::length_error("state space too large for packed memo keys");
    scale *= base;
  }
}

std::uint64_t DecompositionCounter::key(std::size_t root, const Weight& residual) const {
  std::uint64_t k = root;
  for (std::size_t j = 0; j < residual.rank(); ++j)
    k += radix_[j] * static_cast<std::uint64_t>(residual[j]);
  return k;
}

QPoly DecompositionCounter::compute() {
  if (negative_) return {};
  return solve(0, target_);
}

const QPoly& DecompositionCounter::solve(std::size_t root, const Weight& residual) {
  static const QPoly kZero;
  static const QPoly kOne = QPoly::constant(1);
  if (residual.is_zero()) return kOne;
  if (root == roots_.size()) return kZero;
  for (std::size_t j = 0; j < residual.rank(); ++j)
    if (residual[j] > 0 && !covers_[root][j]) return kZero;

  const std::uint64_t k = key(root, residual);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  QPoly acc;
  Weight rest = residual;
  for (std::size_t copies = 0; !rest.has_negative(); ++copies) {
    acc.add_shifted(solve(root + 1, rest), copies);
    rest -= roots_[root];
  }
  return memo_.emplace(k, std::move(acc)).first->second;
}

QPoly qanalog(const RootSystem& system, const Weight& target) {
  return DecompositionCounter(system, target).compute();
}

BigInt count_decompositions(const RootSystem& system, const Weight& target) {
  const QPoly p = qanalog(system, target);
  BigInt total = 0;
  for (const auto& c : p.coeffs()) total += c;
  return total;
}

}  // namespace kostant
