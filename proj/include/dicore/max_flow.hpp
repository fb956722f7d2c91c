#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dicore {

// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  using Capacity = std::int64_t;

  explicit MaxFlow(std::size_t nodes);

  // Returns the index of the forward edge.
  std::size_t add_edge(std::size_t from, std::size_t to, Capacity capacity);

  Capacity run(std::size_t source, std::size_t sink);

  // After run(): nodes reachable from the source in the residual network,
  // i.e. the source side of the inclusion-minimal minimum cut.
  std::vector<bool> source_side(std::size_t source) const;

 private:
  struct Edge {
    std::size_t to;
    Capacity residual;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  Capacity push(std::size_t node, std::size_t sink, Capacity limit);

  std::vector<Edge> edges_;  // edge i and i ^ 1 are a forward/backward pair
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace dicore
