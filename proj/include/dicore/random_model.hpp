#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dicore/digraph.hpp"
#include "dicore/random.hpp"

namespace dicore {

// Draws D in D(n, p): every ordered pair (u, v), u != v, independently gets
// an arc with probability p. Pairs are visited in lexicographic order
// (u major, then v) and each consumes exactly one 32-bit draw from
// Stream(seed), so (n, p, seed) determines the digraph bit for bit. Because
// the draw for a pair does not depend on p, two calls sharing a seed are
// coupled: the digraph at the smaller p is a subdigraph of the other.
//
// Throws std::invalid_argument when p is outside [0, 1].
Digraph sample(std::size_t n, double p, Seed seed);

struct ProbabilityMass {
  double mass = 0.0;
  double log_mass = 0.0;  // natural log; -infinity when mass is 0
};

// p^|A(D)| (1-p)^(n(n-1) - |A(D)|), with 0^0 = 1.
ProbabilityMass probability_mass(const Digraph& d, double p);

inline constexpr std::size_t kMaxEnumerationVertices = 4;

// Calls fn once for every digraph on n <= 4 labelled vertices. Digraph i
// (0-based) has arc number b present iff bit b of i is set, where arcs are
// numbered in lexicographic order of ordered pairs. Throws LimitExceeded for
// n > 4.
void for_each_digraph(std::size_t n, const std::function<void(const Digraph&)>& fn);

std::vector<Digraph> enumerate_all(std::size_t n);

}  // namespace dicore
