#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dicore/digraph.hpp"

namespace dicore {

// A total map from V(source) to V(target).
class VertexMap {
 public:
  VertexMap() = default;

  // Throws std::out_of_range when image.size() != source_size or an entry is
  // not below target_size.
  VertexMap(std::size_t source_size, std::size_t target_size, std::vector<Vertex> image);

  static VertexMap identity(std::size_t n);
  static VertexMap constant(std::size_t source_size, std::size_t target_size, Vertex value);

  std::size_t source_size() const noexcept { return image_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  const std::vector<Vertex>& image() const noexcept { return image_; }

  // Preimage of t, sorted.
  std::vector<Vertex> fiber(Vertex t) const;
  bool is_injective() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::size_t target_size_ = 0;
  std::vector<Vertex> image_;
};

// second after first: v -> second(first(v)).
VertexMap compose(const VertexMap& first, const VertexMap& second);

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<VertexMap> map;  // present iff status == Found
  std::uint64_t nodes = 0;       // search-tree node expansions spent
};

// True iff rho is an acyclic homomorphism from -> to:
//  (i)  every arc uv of `from` has rho(u) == rho(v) or rho(u)rho(v) in A(to);
//  (ii) every fiber rho^-1(t) induces an acyclic subdigraph of `from`.
// Throws std::invalid_argument when the map's dimensions do not match.
bool verify_acyclic_hom(const Digraph& from, const Digraph& to, const VertexMap& rho);

// Backtracking search for an acyclic homomorphism from -> to. NotFound is
// only reported after the search space is exhausted; BudgetExceeded once
// more than `budget` nodes were expanded.
SearchResult find_acyclic_hom(const Digraph& from, const Digraph& to,
                              std::uint64_t budget = kDefaultSearchBudget);

// Search for an acyclic endomorphism of d with some fiber of size >= 2.
//
// The top level branches on the merged pair {x, y} and its common image z.
// Pairs are tried in order of decreasing common-neighbourhood size: merging
// x and y forces N(x) u N(y) into N[z], which fails fastest when that union
// is large. Once every z has been refuted for a pair, later branches also
// forbid that pair from merging, since any map merging it would already have
// been found.
SearchResult find_noninjective_endomorphism(const Digraph& d, std::uint64_t budget = kDefaultSearchBudget);

enum class CoreStatus { Core, NotCore, Unknown };

struct CoreVerdict {
  CoreStatus status = CoreStatus::Unknown;
  std::optional<VertexMap> witness;  // non-injective acyclic endomorphism, iff NotCore
  std::uint64_t nodes = 0;
};

// d is a core when its only acyclic endomorphisms are automorphisms. For a
// finite digraph this is the same as having no non-injective acyclic
// endomorphism:
//
//   An injective self-map rho of a finite set is a bijection, so every fiber
//   is a singleton and (ii) holds trivially. Condition (i) then says every
//   arc uv maps to the arc rho(u)rho(v), since rho(u) != rho(v). The induced
//   map on arcs is injective from A(d) into A(d), hence onto because A(d) is
//   finite, so rho^-1 also maps arcs to arcs and rho is an automorphism.
//   Conversely every automorphism is an injective acyclic endomorphism.
//
// Unknown is reported, never coerced, when the budget runs out.
CoreVerdict is_core(const Digraph& d, std::uint64_t budget = kDefaultSearchBudget);

// True iff rho is a bijection V(d) -> V(d) with uv in A(d) <=> rho(u)rho(v) in A(d).
// Throws std::invalid_argument when rho is not a self-map of d.
bool is_automorphism(const Digraph& d, const VertexMap& rho);

// Non-induced containment: is there an injective map V(pattern) -> V(host)
// sending every arc of pattern to an arc of host? On Found, map is the
// embedding.
SearchResult subdigraph_contains(const Digraph& host, const Digraph& pattern,
                                 std::uint64_t budget = kDefaultSearchBudget);

}  // namespace dicore
