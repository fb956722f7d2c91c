#pragma once

#include <cstddef>

#include "dicore/digraph.hpp"

namespace dicore {

inline constexpr std::size_t kMaxAcyclicSetVertices = 40;

// A maximum-cardinality vertex set inducing an acyclic subdigraph, by
// branch and bound. Vertices joined by an anti-parallel pair can never both
// be chosen, so a greedy clique partition of the remaining candidates under
// that relation bounds how many more fit. Exponential; n <= 40 (LimitExceeded
// otherwise).
VertexSubset maximum_acyclic_set(const Digraph& d);

}  // namespace dicore
