#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace dicore {

// Count, mean, extremes and sample variance of a stream of observations.
// merge() uses the pairwise update of Chan, Golub and LeVeque, so combining
// partial summaries gives the same count/min/max as one pass and a mean and
// variance equal up to rounding.
class RunningStats {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }

  void merge(const RunningStats& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double n = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * nb / n;
    m2_ += other.m2_ + delta * delta * na * nb / n;
    count_ += other.count_;
    min_ = std::min(min_, other.min_);
    max_ = std::max(max_, other.max_);
  }

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return count_ == 0 ? std::numeric_limits<double>::quiet_NaN() : mean_; }
  double min() const noexcept { return count_ == 0 ? std::numeric_limits<double>::quiet_NaN() : min_; }
  double max() const noexcept { return count_ == 0 ? std::numeric_limits<double>::quiet_NaN() : max_; }
  double variance() const noexcept { return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1); }
  double stddev() const noexcept { return std::sqrt(variance()); }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

// Observed statistics next to the closed-form value they estimate.
struct StatSummary {
  RunningStats stats;
  double reference = 0.0;

  // (mean - reference) / reference; 0 when both are 0.
  double relative_deviation() const {
    const double mean = stats.mean();
    if (reference == 0.0) return mean == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return (mean - reference) / reference;
  }
};

}  // namespace dicore
