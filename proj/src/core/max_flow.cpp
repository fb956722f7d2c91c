#include "dicore/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace dicore {

MaxFlow::MaxFlow(std::size_t nodes) : adjacency_(nodes), level_(nodes), cursor_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, Capacity capacity) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  const std::size_t id = edges_.size();
  edges_.push_back({to, capacity});
  edges_.push_back({from, 0});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    for (std::size_t id : adjacency_[u]) {
      const Edge& e = edges_[id];
      if (e.residual > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[u] + 1;
        queue.push(e.to);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::push(std::size_t node, std::size_t sink, Capacity limit) {
  if (node == sink) return limit;
  for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const std::size_t id = adjacency_[node][i];
    Edge& e = edges_[id];
    if (e.residual <= 0 || level_[e.to] != level_[node] + 1) continue;
    const Capacity pushed = push(e.to, sink, std::min(limit, e.residual));
    if (pushed > 0) {
      e.residual -= pushed;
      edges_[id ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

MaxFlow::Capacity MaxFlow::run(std::size_t source, std::size_t sink) {
  Capacity total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (Capacity f = push(source, sink, std::numeric_limits<Capacity>::max())) total += f;
  }
  return total;
}

std::vector<bool> MaxFlow::source_side(std::size_t source) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t id : adjacency_[u]) {
      const Edge& e = edges_[id];
      if (e.residual > 0 && !seen[e.to]) {
        seen[e.to] = true;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

}  // namespace dicore
