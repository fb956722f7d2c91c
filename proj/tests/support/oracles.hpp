#pragma once

// Slow, obviously-correct reference implementations. None of these call the
// library routine they are used to check.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "dicore/digraph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const dicore::Digraph& d) {
  const std::size_t n = d.vertex_count();
  Matrix a(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : d.arcs()) a[u][v] = true;
  return a;
}

// Cycle detection by transitive closure (Floyd-Warshall) on the vertices
// selected by `keep`: a cycle exists iff some vertex reaches itself.
inline bool has_cycle(const Matrix& a, const std::vector<bool>& keep) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) r[u][v] = keep[u] && keep[v] && a[u][v];
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  for (std::size_t v = 0; v < n; ++v)
    if (r[v][v]) return true;
  return false;
}

inline bool has_cycle(const dicore::Digraph& d) {
  return has_cycle(adjacency(d), std::vector<bool>(d.vertex_count(), true));
}

// Conditions (i) and (ii) straight from the definition.
inline bool is_acyclic_hom(const Matrix& from, const Matrix& to, const std::vector<std::uint32_t>& rho) {
  const std::size_t n = from.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (from[u][v] && rho[u] != rho[v] && !to[rho[u]][rho[v]]) return false;
  for (std::size_t t = 0; t < to.size(); ++t) {
    std::vector<bool> fiber(n);
    for (std::size_t v = 0; v < n; ++v) fiber[v] = rho[v] == t;
    if (has_cycle(from, fiber)) return false;
  }
  return true;
}

// Calls fn(map) for each of the m^n maps [n] -> [m], in odometer order.
template <class Fn>
void for_each_map(std::size_t n, std::size_t m, Fn&& fn) {
  std::vector<std::uint32_t> map(n, 0);
  if (m == 0) {
    if (n == 0) fn(map);
    return;
  }
  while (true) {
    fn(map);
    std::size_t i = 0;
    while (i < n && ++map[i] == m) map[i++] = 0;
    if (i == n) return;
  }
}

inline bool injective(const std::vector<std::uint32_t>& map) {
  std::vector<bool> seen(map.size() + 1, false);
  for (auto x : map) {
    if (x >= seen.size()) seen.resize(x + 1, false);
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Core iff no non-injective self-map is an acyclic homomorphism.
inline bool is_core(const dicore::Digraph& d) {
  const Matrix a = adjacency(d);
  bool core = true;
  for_each_map(d.vertex_count(), d.vertex_count(), [&](const std::vector<std::uint32_t>& map) {
    if (core && !injective(map) && is_acyclic_hom(a, a, map)) core = false;
  });
  return core;
}

// Maximum over nonempty vertex subsets of induced arcs / size, as a reduced
// fraction. Uses arbitrary (non-induced) subdigraphs: every subset of the arcs
// inside each vertex set is tried when `all_subdigraphs` is set, so the
// induced-subgraph reduction can be checked against the literal definition.
inline std::pair<std::int64_t, std::int64_t> max_density(const dicore::Digraph& d, bool all_subdigraphs = false) {
  const Matrix a = adjacency(d);
  const std::size_t n = d.vertex_count();
  std::int64_t best_num = 0, best_den = 1;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::int64_t size = 0, arcs = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!((s >> u) & 1)) continue;
      ++size;
      for (std::size_t v = 0; v < n; ++v)
        if (((s >> v) & 1) && a[u][v]) ++arcs;
    }
    const std::int64_t lo = all_subdigraphs ? 0 : arcs;
    for (std::int64_t k = lo; k <= arcs; ++k)
      if (k * best_den > best_num * size) {
        best_num = k;
        best_den = size;
      }
  }
  const std::int64_t g = std::gcd(best_num, best_den);
  return {best_num / g, best_den / g};
}

// Exact binomial tails in log space.
inline double binomial_log_pmf(std::uint64_t n, double p, std::uint64_t k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1) + static_cast<double>(k) * std::log(p) +
         static_cast<double>(n - k) * std::log1p(-p);
}

inline double binomial_upper_tail(std::uint64_t n, double p, double x) {  // P(X >= x)
  double s = 0;
  for (std::uint64_t k = 0; k <= n; ++k)
    if (static_cast<double>(k) >= x) s += std::exp(binomial_log_pmf(n, p, k));
  return s;
}

inline double binomial_lower_tail(std::uint64_t n, double p, double x) {  // P(X <= x)
  double s = 0;
  for (std::uint64_t k = 0; k <= n; ++k)
    if (static_cast<double>(k) <= x) s += std::exp(binomial_log_pmf(n, p, k));
  return s;
}

// Regularized upper incomplete gamma Q(a, x), for chi-square p-values.
inline double gamma_q(double a, double x) {
  if (x <= 0) return 1.0;
  const double lead = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1) {
    double term = 1.0 / a, sum = term;
    for (int k = 1; k < 1000; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term < sum * 1e-16) break;
    }
    return 1.0 - sum * std::exp(lead);
  }
  // Lentz continued fraction.
  const double tiny = 1e-300;
  double b = x + 1 - a, c = 1 / tiny, dd = 1 / b, h = dd;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2;
    dd = an * dd + b;
    if (std::fabs(dd) < tiny) dd = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    dd = 1 / dd;
    const double delta = dd * c;
    h *= delta;
    if (std::fabs(delta - 1) < 1e-16) break;
  }
  return std::exp(lead) * h;
}

}  // namespace oracle
