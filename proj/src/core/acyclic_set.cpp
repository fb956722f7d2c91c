#include "dicore/acyclic_set.hpp"

#include <bit>
#include <string>
#include <vector>

#include "dicore/errors.hpp"

namespace dicore {
namespace {

using Mask = std::uint64_t;

class AcyclicSetSearch {
 public:
  explicit AcyclicSetSearch(const Digraph& d) : n_(d.vertex_count()), out_(n_, 0), in_(n_, 0), mutual_(n_, 0) {
    for (const auto& [u, v] : d.arcs()) {
      out_[u] |= Mask{1} << v;
      in_[v] |= Mask{1} << u;
    }
    for (std::size_t v = 0; v < n_; ++v) mutual_[v] = out_[v] & in_[v];
  }

  Mask run() {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    best_ = 0;
    best_size_ = 0;
    branch(0, all);
    return best_;
  }

 private:
  // Would adding u to the acyclic set s close a cycle through u?
  bool closes_cycle(Mask s, std::size_t u) const {
    Mask reach = out_[u] & s;
    Mask frontier = reach;
    while (frontier != 0) {
      if (reach & in_[u]) return true;
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= out_[std::countr_zero(f)] & s;
      frontier = next & ~reach;
      reach |= frontier;
    }
    return (reach & in_[u]) != 0;
  }

  int clique_cover_bound(Mask candidates) const {
    std::vector<Mask> cliques;
    for (Mask c = candidates; c != 0; c &= c - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(c));
      bool placed = false;
      for (Mask& clique : cliques) {
        if ((clique & ~mutual_[v]) == 0) {
          clique |= Mask{1} << v;
          placed = true;
          break;
        }
      }
      if (!placed) cliques.push_back(Mask{1} << v);
    }
    return static_cast<int>(cliques.size());
  }

  void branch(Mask chosen, Mask candidates) {
    const int size = std::popcount(chosen);
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen;
    }
    if (candidates == 0) return;
    if (size + std::popcount(candidates) <= best_size_) return;
    if (size + clique_cover_bound(candidates) <= best_size_) return;

    // Branch on the candidate with the most anti-parallel partners among candidates.
    std::size_t pick = 0;
    int pick_conflicts = -1;
    for (Mask c = candidates; c != 0; c &= c - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(c));
      const int conflicts = std::popcount(mutual_[v] & candidates);
      if (conflicts > pick_conflicts) {
        pick_conflicts = conflicts;
        pick = v;
      }
    }
    const Mask bit = Mask{1} << pick;
    const Mask with = chosen | bit;
    Mask remaining = 0;
    for (Mask c = candidates & ~bit; c != 0; c &= c - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(c));
      if (!closes_cycle(with, u)) remaining |= Mask{1} << u;
    }
    branch(with, remaining);
    branch(chosen, candidates & ~bit);
  }

  std::size_t n_;
  std::vector<Mask> out_, in_, mutual_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

VertexSubset maximum_acyclic_set(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n > kMaxAcyclicSetVertices)
    throw LimitExceeded("exact maximum acyclic set is limited to n <= " + std::to_string(kMaxAcyclicSetVertices) +
                        " (got n = " + std::to_string(n) + ")");
  const Mask best = AcyclicSetSearch(d).run();
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < n; ++v)
    if ((best >> v) & 1U) members.push_back(static_cast<Vertex>(v));
  return VertexSubset(n, std::move(members));
}

}  // namespace dicore
