#pragma once

#include <cstddef>
#include <cstdint>

#include "dicore/digraph.hpp"
#include "dicore/rational.hpp"

namespace dicore {

// Maximum density m(D) = max { a_C / v_C : C a subdigraph of D, v_C > 0 }.
//
// Both solvers search vertex subsets only. That loses nothing: for a fixed
// vertex set S, the subdigraph on S with the most arcs is the induced one
// D[S], so the maximum over all subdigraphs equals the maximum over nonempty
// S of |A(D[S])| / |S|.
struct DensityResult {
  std::uint64_t arcs = 0;      // a_C = arc count of the witness's induced subdigraph
  std::uint64_t vertices = 1;  // v_C = witness size, always >= 1
  VertexSubset witness;

  Rational value() const {
    return Rational(static_cast<std::int64_t>(arcs), static_cast<std::int64_t>(vertices));
  }
};

inline constexpr std::size_t kMaxBruteForceDensityVertices = 20;

// Exhaustive over all 2^n - 1 nonempty subsets; n <= 20 (LimitExceeded
// otherwise, std::invalid_argument for n = 0). Among maximizers the witness
// is the smallest subset, ties broken by the lexicographically least sorted
// member list.
DensityResult max_density_bruteforce(const Digraph& d);

// Parametric max-flow. For a guess g = j / n^2 the closure network
//   source -> arc e         capacity n^2
//   arc e  -> tail, head    capacity infinite
//   vertex -> sink          capacity j
// has min cut n^2 |A| - max_S (n^2 a(S) - j |S|), so some S is denser than g
// iff the cut is below n^2 |A|. Two distinct densities with denominators
// <= n differ by at least 1 / n^2, so binary search over j isolates m(D)
// exactly and the last feasible cut's source side is a witness. All
// arithmetic is integral. std::invalid_argument for n = 0.
DensityResult max_density_exact(const Digraph& d);

// n^(-1 / m(C)): the containment threshold for pattern C in D(n, p).
// Requires at least one arc in C and n >= 2 (std::invalid_argument otherwise).
double threshold_probability(const Digraph& pattern, std::size_t n);

}  // namespace dicore
