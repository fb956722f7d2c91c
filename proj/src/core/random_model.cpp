#include "dicore/random_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "dicore/errors.hpp"

namespace dicore {

Digraph sample(std::size_t n, double p, Seed seed) {
  const BernoulliThreshold coin(p);
  Stream rng(seed);
  DigraphBuilder builder(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && coin(rng)) builder.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(builder).freeze();
}

ProbabilityMass probability_mass(const Digraph& d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
  const double n = static_cast<double>(d.vertex_count());
  const double present = static_cast<double>(d.arc_count());
  const double absent = n * (n - 1.0) - present;

  // x * log(y) with the convention 0 * log 0 = 0.
  auto term = [](double count, double log_base) { return count == 0.0 ? 0.0 : count * log_base; };
  const double log_mass = term(present, std::log(p)) + term(absent, std::log1p(-p));
  return {std::exp(log_mass), log_mass};
}

void for_each_digraph(std::size_t n, const std::function<void(const Digraph&)>& fn) {
  if (n > kMaxEnumerationVertices)
    throw LimitExceeded("exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumerationVertices) +
                        " (requested n = " + std::to_string(n) + ")");
  std::vector<Arc> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));

  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    DigraphBuilder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) b.add_arc(pairs[i].first, pairs[i].second);
    fn(std::move(b).freeze());
  }
}

std::vector<Digraph> enumerate_all(std::size_t n) {
  std::vector<Digraph> all;
  for_each_digraph(n, [&](const Digraph& d) { all.push_back(d); });
  return all;
}

}  // namespace dicore
