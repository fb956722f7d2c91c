#pragma once

#include <optional>

namespace dicore {

// (1 + x) log(1 + x) - x for x >= -1 (value 1 at x = -1, using 0 log 0 = 0),
// +infinity for x < -1. Near 0 the power series is used to avoid
// cancellation.
double chernoff_rate(double x);

enum class Tail { Upper, Lower };

// Tail bounds for X ~ Bin(n, p) with mean lambda = np, deviation t >= 0.
//
//   Upper: P(X >= lambda + t) <= exp(-lambda rate(t / lambda))
//                             <= exp(-t^2 / (2 (lambda + t / 3)))
//   Lower: P(X <= lambda - t) <= exp(-lambda rate(-t / lambda))
//                             <= exp(-t^2 / (2 lambda))
//
// Values are clamped to [0, 1].
struct TailBound {
  Tail tail = Tail::Upper;
  double rate_bound = 1.0;
  double quadratic_bound = 1.0;
};

// std::invalid_argument unless lambda > 0 and t >= 0.
TailBound chernoff_upper(double lambda, double t);
TailBound chernoff_lower(double lambda, double t);

// P(|X - E X| >= eps E X) <= 2 exp(-rate(eps) E X), and for eps <= 3/2 also
// <= 2 exp(-eps^2 E X / 3). Both clamped to [0, 1].
struct RelativeDeviationBound {
  double general = 1.0;
  std::optional<double> simplified;  // present iff eps <= 3/2
};

// std::invalid_argument unless eps > 0 and mean > 0.
RelativeDeviationBound corollary_bound(double eps, double mean);

}  // namespace dicore
