#include "dicore/density.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicore/errors.hpp"
#include "dicore/max_flow.hpp"

namespace dicore {
namespace {

// Sorted-member lexicographic order for two subsets of equal size: the one
// holding the lowest differing vertex comes first.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (0U - diff))) != 0;
}

struct ClosureSolution {
  bool denser = false;  // some S has n^2 a(S) - j |S| > 0
  std::vector<Vertex> members;
};

ClosureSolution solve_closure(const Digraph& d, const std::vector<Arc>& arcs, std::int64_t scale,
                              std::int64_t j) {
  const std::size_t n = d.vertex_count();
  const std::size_t m = arcs.size();
  const std::size_t source = 0, sink = 1, first_arc = 2, first_vertex = 2 + m;
  const MaxFlow::Capacity infinite = scale * static_cast<std::int64_t>(m) + 1;

  MaxFlow flow(2 + m + n);
  for (std::size_t e = 0; e < m; ++e) {
    flow.add_edge(source, first_arc + e, scale);
    flow.add_edge(first_arc + e, first_vertex + arcs[e].first, infinite);
    flow.add_edge(first_arc + e, first_vertex + arcs[e].second, infinite);
  }
  for (std::size_t v = 0; v < n; ++v) flow.add_edge(first_vertex + v, sink, j);

  const auto cut = flow.run(source, sink);
  ClosureSolution result;
  result.denser = cut < scale * static_cast<std::int64_t>(m);
  if (result.denser) {
    const auto side = flow.source_side(source);
    for (std::size_t v = 0; v < n; ++v)
      if (side[first_vertex + v]) result.members.push_back(static_cast<Vertex>(v));
  }
  return result;
}

}  // namespace

DensityResult max_density_bruteforce(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) throw std::invalid_argument("maximum density is undefined for the empty digraph");
  if (n > kMaxBruteForceDensityVertices)
    throw LimitExceeded("brute-force density is limited to n <= " + std::to_string(kMaxBruteForceDensityVertices) +
                        " (got n = " + std::to_string(n) + ")");

  std::vector<std::uint32_t> out_mask(n, 0), in_mask(n, 0);
  for (const auto& [u, v] : d.arcs()) {
    out_mask[u] |= 1U << v;
    in_mask[v] |= 1U << u;
  }

  const std::uint32_t total = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  std::vector<std::uint16_t> arcs_in(std::size_t{total} + 1, 0);
  std::uint32_t best = 1;  // {0}: density 0
  std::uint64_t best_arcs = 0, best_size = 1;

  for (std::uint32_t mask = 1; mask <= total && mask != 0; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    arcs_in[mask] = static_cast<std::uint16_t>(arcs_in[rest] + std::popcount(out_mask[low] & rest) +
                                               std::popcount(in_mask[low] & rest));
    const std::uint64_t a = arcs_in[mask];
    const auto k = static_cast<std::uint64_t>(std::popcount(mask));
    const std::uint64_t lhs = a * best_size, rhs = best_arcs * k;
    if (lhs > rhs || (lhs == rhs && (k < best_size || (k == best_size && lex_less(mask, best))))) {
      best = mask;
      best_arcs = a;
      best_size = k;
    }
  }

  std::vector<Vertex> members;
  for (std::size_t v = 0; v < n; ++v)
    if ((best >> v) & 1U) members.push_back(static_cast<Vertex>(v));
  return {best_arcs, best_size, VertexSubset(n, std::move(members))};
}

DensityResult max_density_exact(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) throw std::invalid_argument("maximum density is undefined for the empty digraph");
  if (d.arc_count() == 0) return {0, 1, VertexSubset(n, {0})};

  const auto arcs = d.arcs();
  const auto scale = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);

  // Invariant: guess lo / n^2 is beaten by some subset, hi / n^2 is not.
  std::int64_t lo = 0;
  std::int64_t hi = static_cast<std::int64_t>(n - 1) * scale;
  ClosureSolution witness = solve_closure(d, arcs, scale, lo);
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    auto attempt = solve_closure(d, arcs, scale, mid);
    if (attempt.denser) {
      lo = mid;
      witness = std::move(attempt);
    } else {
      hi = mid;
    }
  }

  VertexSubset s(n, std::move(witness.members));
  const std::uint64_t a = d.induced_arc_count(s);
  const std::uint64_t k = s.size();
  return {a, k, std::move(s)};
}

double threshold_probability(const Digraph& pattern, std::size_t n) {
  if (pattern.arc_count() == 0) throw std::invalid_argument("threshold needs a pattern with at least one arc");
  if (n < 2) throw std::invalid_argument("threshold needs n >= 2");
  const Rational m = max_density_exact(pattern).value();
  return std::pow(static_cast<double>(n), -static_cast<double>(m.den()) / static_cast<double>(m.num()));
}

}  // namespace dicore
