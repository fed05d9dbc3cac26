#pragma once

#include <cmath>
#include <cstdint>

namespace tropmc {

// Streaming mean and variance (Welford), mergeable with Chan's pairwise rule.
class Accumulator {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void add_aux(std::uint64_t hits = 1) { aux_count_ += hits; }

  void merge(const Accumulator& other) {
    if (other.count_ == 0) {
      aux_count_ += other.aux_count_;
      return;
    }
    if (count_ == 0) {
      const std::uint64_t aux = aux_count_;
      *this = other;
      aux_count_ += aux;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * (nb / n);
    m2_ += other.m2_ + delta * delta * (na * nb / n);
    count_ += other.count_;
    aux_count_ += other.aux_count_;
  }

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double m2() const noexcept { return m2_; }
  std::uint64_t aux_count() const noexcept { return aux_count_; }

  // Population variance m2/count.
  double variance() const noexcept { return count_ ? m2_ / static_cast<double>(count_) : 0.0; }
  double standard_error() const noexcept {
    return count_ >= 2 ? std::sqrt(variance()) / std::sqrt(static_cast<double>(count_)) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  std::uint64_t aux_count_ = 0;
};

}  // namespace tropmc
