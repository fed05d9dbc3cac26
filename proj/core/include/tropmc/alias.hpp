#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropmc/rng.hpp"

namespace tropmc {

// Walker/Vose alias table: O(n) construction, O(1) draws.
class AliasSampler {
 public:
  AliasSampler() = default;
  // Non-negative weights with a positive sum; they need not be normalised.
  explicit AliasSampler(std::span<const double> weights);

  std::size_t size() const noexcept { return probability_.size(); }
  bool empty() const noexcept { return probability_.empty(); }

  std::size_t sample(Rng& rng) const {
    const double u = rng.uniform() * static_cast<double>(probability_.size());
    const auto column = static_cast<std::size_t>(u);
    return u - static_cast<double>(column) < probability_[column] ? column : alias_[column];
  }

  // Outcome probabilities implied by the table.
  std::vector<double> reconstructed_probabilities() const;

  const std::vector<double>& probability() const noexcept { return probability_; }
  const std::vector<std::uint32_t>& alias() const noexcept { return alias_; }

 private:
  std::vector<double> probability_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace tropmc
