#include "dicore/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dicore {
namespace {

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

void check_tail_args(double lambda, double t) {
  if (!(lambda > 0.0)) throw std::invalid_argument("chernoff bound needs lambda > 0");
  if (!(t >= 0.0)) throw std::invalid_argument("chernoff bound needs t >= 0");
}

}  // namespace

double chernoff_rate(double x) {
  if (std::isnan(x)) return x;
  if (x < -1.0) return std::numeric_limits<double>::infinity();
  if (x == -1.0) return 1.0;
  if (std::abs(x) < 1e-4) {
    // x^2/2 - x^3/6 + x^4/12 - x^5/20; the next term is below 1e-21 relative.
    return x * x * (0.5 + x * (-1.0 / 6.0 + x * (1.0 / 12.0 - x / 20.0)));
  }
  return (1.0 + x) * std::log1p(x) - x;
}

TailBound chernoff_upper(double lambda, double t) {
  check_tail_args(lambda, t);
  TailBound b;
  b.tail = Tail::Upper;
  b.rate_bound = clamp_probability(std::exp(-lambda * chernoff_rate(t / lambda)));
  b.quadratic_bound = clamp_probability(std::exp(-t * t / (2.0 * (lambda + t / 3.0))));
  return b;
}

TailBound chernoff_lower(double lambda, double t) {
  check_tail_args(lambda, t);
  TailBound b;
  b.tail = Tail::Lower;
  b.rate_bound = clamp_probability(std::exp(-lambda * chernoff_rate(-t / lambda)));
  b.quadratic_bound = clamp_probability(std::exp(-t * t / (2.0 * lambda)));
  return b;
}

RelativeDeviationBound corollary_bound(double eps, double mean) {
  if (!(eps > 0.0)) throw std::invalid_argument("relative deviation bound needs eps > 0");
  if (!(mean > 0.0)) throw std::invalid_argument("relative deviation bound needs a positive mean");
  RelativeDeviationBound b;
  b.general = clamp_probability(2.0 * std::exp(-chernoff_rate(eps) * mean));
  if (eps <= 1.5) b.simplified = clamp_probability(2.0 * std::exp(-eps * eps * mean / 3.0));
  return b;
}

}  // namespace dicore
