#include "tropmc/alias.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tropmc/errors.hpp"

namespace tropmc {

AliasSampler::AliasSampler(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw ContractError("alias table needs at least one outcome");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ContractError("alias weights must be finite and non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw ContractError("alias weights must have a positive sum");

  probability_.resize(n);
  alias_.resize(n);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small, large, zero;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] * static_cast<double>(n) / total;
    if (weights[i] == 0.0)
      zero.push_back(static_cast<std::uint32_t>(i));
    else if (scaled[i] < 1.0)
      small.push_back(static_cast<std::uint32_t>(i));
    else
      large.push_back(static_cast<std::uint32_t>(i));
  }
  // Zero-weight outcomes go last on the stack so they are paired first, while
  // plenty of large mass remains; rounding can then never promote them.
  small.insert(small.end(), zero.begin(), zero.end());

  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back();
    small.pop_back();
    std::uint32_t l = large.back();
    probability_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  for (std::uint32_t i : large) {
    probability_[i] = 1.0;
    alias_[i] = i;
  }
  // Leftovers are rounding residue; a zero-weight one must never be returned.
  const auto heaviest = static_cast<std::uint32_t>(
      std::max_element(weights.begin(), weights.end()) - weights.begin());
  for (std::uint32_t i : small) {
    probability_[i] = weights[i] == 0.0 ? 0.0 : 1.0;
    alias_[i] = weights[i] == 0.0 ? heaviest : i;
  }
}

std::vector<double> AliasSampler::reconstructed_probabilities() const {
  const std::size_t n = probability_.size();
  std::vector<double> p(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] += probability_[i];
    p[alias_[i]] += 1.0 - probability_[i];
  }
  for (double& x : p) x /= static_cast<double>(n);
  return p;
}

}  // namespace tropmc
