#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "dicore/bits.hpp"

namespace dicore {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

// Largest vertex count a Digraph accepts. Adjacency is held as two dense bit
// matrices, so memory grows as n^2 / 4 bytes.
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 15;

// A subset of {0, ..., parent_size - 1}, stored sorted.
class VertexSubset {
 public:
  VertexSubset() = default;

  // Throws std::out_of_range on a member >= parent_size and
  // std::invalid_argument on duplicates. Members may be given in any order.
  VertexSubset(std::size_t parent_size, std::vector<Vertex> members);

  static VertexSubset all(std::size_t parent_size);
  static VertexSubset from_bits(std::size_t parent_size, std::span<const bits::Word> row);

  std::size_t parent_size() const noexcept { return parent_size_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const noexcept { return members_; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::size_t parent_size_ = 0;
  std::vector<Vertex> members_;
};

// A simple digraph on vertices 0..n-1: no loops, no parallel arcs, but u->v
// and v->u may both be present. Immutable once built; see DigraphBuilder.
//
// Both adjacency directions are stored as bit rows, so has_arc is O(1) and
// in/out neighbourhoods are available as words for set operations.
class Digraph {
 public:
  Digraph() = default;

  // Arcless digraph on n vertices.
  explicit Digraph(std::size_t n);

  // Convenience for tests and fixtures; same checks as DigraphBuilder::add_arc.
  Digraph(std::size_t n, std::initializer_list<Arc> arcs);
  Digraph(std::size_t n, std::span<const Arc> arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_; }

  bool has_arc(Vertex u, Vertex v) const;

  std::span<const bits::Word> out_row(Vertex v) const;
  std::span<const bits::Word> in_row(Vertex v) const;
  std::size_t words_per_row() const noexcept { return words_; }

  std::size_t out_degree(Vertex v) const;
  std::size_t in_degree(Vertex v) const;

  // All arcs, lexicographically sorted.
  std::vector<Arc> arcs() const;

  // Vertices joined to v by an arc in either direction. An anti-parallel
  // pair contributes one neighbour.
  VertexSubset neighbors(Vertex v) const;
  std::size_t neighbor_count(Vertex v) const;

  // neighbors(v) plus v itself.
  VertexSubset closed_neighborhood(Vertex v) const;

  // neighbors(u) intersected with neighbors(v); u == v is rejected.
  VertexSubset common_neighbors(Vertex u, Vertex v) const;
  std::size_t common_neighbor_count(Vertex u, Vertex v) const;

  // The subdigraph induced by s, relabelled by the unique order-preserving
  // bijection s -> {0, ..., |s|-1}: the i-th smallest member becomes vertex i.
  Digraph induced(const VertexSubset& s) const;

  // Number of arcs with both endpoints in s, without building the subdigraph.
  std::size_t induced_arc_count(const VertexSubset& s) const;

  // True iff there is no directed cycle. An anti-parallel pair is a 2-cycle.
  bool is_acyclic() const;

  // Identifies w_i with v_i for each pair (v_i, w_i). The result has one
  // vertex per pair (vertex i is pair i) and an arc i->j, i != j, iff D has
  // at least one of v_i v_j, v_i w_j, w_i v_j, w_i w_j. Within-pair arcs would
  // become loops and are dropped; parallel arcs collapse.
  Digraph contract_pairs(std::span<const Arc> pairs) const;

  // Copy with arc u->v added.
  Digraph with_arc(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.out_ == b.out_;
  }

 private:
  friend class DigraphBuilder;

  void check_vertex(Vertex v) const;
  std::span<bits::Word> out_row_mut(Vertex v) { return {out_.data() + std::size_t{v} * words_, words_}; }
  std::span<bits::Word> in_row_mut(Vertex v) { return {in_.data() + std::size_t{v} * words_, words_}; }
  bool insert_arc(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t arcs_ = 0;
  std::vector<bits::Word> out_;
  std::vector<bits::Word> in_;
};

// Mutable staging area for a Digraph.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n) : graph_(n) {}

  // Idempotent. Returns true when the arc was not already present.
  // Throws std::invalid_argument on a loop and std::out_of_range on a vertex
  // outside 0..n-1.
  bool add_arc(Vertex u, Vertex v);

  bool has_arc(Vertex u, Vertex v) const { return graph_.has_arc(u, v); }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t arc_count() const noexcept { return graph_.arc_count(); }

  Digraph freeze() && { return std::move(graph_); }

 private:
  Digraph graph_;
};

// Complete digraph: every ordered pair of distinct vertices is an arc.
Digraph complete_digraph(std::size_t n);

// Directed cycle 0->1->...->(k-1)->0; k >= 2.
Digraph directed_cycle(std::size_t k);

}  // namespace dicore
