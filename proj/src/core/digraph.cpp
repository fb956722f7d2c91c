#include "dicore/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dicore/errors.hpp"

namespace dicore {

VertexSubset::VertexSubset(std::size_t parent_size, std::vector<Vertex> members)
    : parent_size_(parent_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= parent_size_)
      throw std::out_of_range("vertex " + std::to_string(members_[i]) + " outside subset universe of size " +
                              std::to_string(parent_size_));
    if (i > 0 && members_[i] == members_[i - 1])
      throw std::invalid_argument("duplicate vertex " + std::to_string(members_[i]) + " in subset");
  }
}

VertexSubset VertexSubset::all(std::size_t parent_size) {
  std::vector<Vertex> members(parent_size);
  for (std::size_t i = 0; i < parent_size; ++i) members[i] = static_cast<Vertex>(i);
  return VertexSubset(parent_size, std::move(members));
}

VertexSubset VertexSubset::from_bits(std::size_t parent_size, std::span<const bits::Word> row) {
  std::vector<Vertex> members;
  bits::for_each(row, [&](std::size_t i) {
    if (i < parent_size) members.push_back(static_cast<Vertex>(i));
  });
  VertexSubset s;
  s.parent_size_ = parent_size;
  s.members_ = std::move(members);
  return s;
}

bool VertexSubset::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Digraph::Digraph(std::size_t n) : n_(n), words_(bits::words_for(n)) {
  if (n > kMaxVertices)
    throw LimitExceeded("digraph with " + std::to_string(n) + " vertices exceeds the limit of " +
                        std::to_string(kMaxVertices));
  out_.assign(n_ * words_, 0);
  in_.assign(n_ * words_, 0);
}

Digraph::Digraph(std::size_t n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n) {
  for (const auto& [u, v] : arcs) insert_arc(u, v);
}

void Digraph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for digraph on " + std::to_string(n_) +
                            " vertices");
}

bool Digraph::insert_arc(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u) + " is not allowed");
  if (bits::test(out_row(u), v)) return false;
  bits::set(out_row_mut(u), v);
  bits::set(in_row_mut(v), u);
  ++arcs_;
  return true;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return bits::test(out_row(u), v);
}

std::span<const bits::Word> Digraph::out_row(Vertex v) const {
  return {out_.data() + std::size_t{v} * words_, words_};
}

std::span<const bits::Word> Digraph::in_row(Vertex v) const { return {in_.data() + std::size_t{v} * words_, words_}; }

std::size_t Digraph::out_degree(Vertex v) const {
  check_vertex(v);
  return bits::count(out_row(v));
}

std::size_t Digraph::in_degree(Vertex v) const {
  check_vertex(v);
  return bits::count(in_row(v));
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arcs_);
  for (std::size_t u = 0; u < n_; ++u)
    bits::for_each(out_row(static_cast<Vertex>(u)),
                   [&](std::size_t v) { result.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v)); });
  return result;
}

VertexSubset Digraph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<bits::Word> row(words_);
  auto out = out_row(v);
  auto in = in_row(v);
  for (std::size_t w = 0; w < words_; ++w) row[w] = out[w] | in[w];
  return VertexSubset::from_bits(n_, row);
}

std::size_t Digraph::neighbor_count(Vertex v) const {
  check_vertex(v);
  auto out = out_row(v);
  auto in = in_row(v);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(out[w] | in[w]));
  return c;
}

VertexSubset Digraph::closed_neighborhood(Vertex v) const {
  auto members = neighbors(v).members();
  members.push_back(v);
  return VertexSubset(n_, std::move(members));
}

VertexSubset Digraph::common_neighbors(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("common neighbours need two distinct vertices");
  std::vector<bits::Word> row(words_);
  auto ou = out_row(u), iu = in_row(u), ov = out_row(v), iv = in_row(v);
  for (std::size_t w = 0; w < words_; ++w) row[w] = (ou[w] | iu[w]) & (ov[w] | iv[w]);
  return VertexSubset::from_bits(n_, row);
}

std::size_t Digraph::common_neighbor_count(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("common neighbours need two distinct vertices");
  auto ou = out_row(u), iu = in_row(u), ov = out_row(v), iv = in_row(v);
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w)
    c += static_cast<std::size_t>(std::popcount((ou[w] | iu[w]) & (ov[w] | iv[w])));
  return c;
}

Digraph Digraph::induced(const VertexSubset& s) const {
  if (s.parent_size() != n_)
    throw std::invalid_argument("subset universe size " + std::to_string(s.parent_size()) +
                                " does not match digraph on " + std::to_string(n_) + " vertices");
  const auto& members = s.members();
  Digraph result(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (i != j && bits::test(out_row(members[i]), members[j]))
        result.insert_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return result;
}

std::size_t Digraph::induced_arc_count(const VertexSubset& s) const {
  if (s.parent_size() != n_) throw std::invalid_argument("subset universe size does not match digraph");
  std::vector<bits::Word> mask(words_);
  for (Vertex v : s) bits::set(mask, v);
  std::size_t c = 0;
  for (Vertex v : s) {
    auto row = out_row(v);
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(row[w] & mask[w]));
  }
  return c;
}

bool Digraph::is_acyclic() const {
  // Repeatedly strip vertices with no remaining in-arcs.
  std::vector<std::size_t> indegree(n_);
  std::vector<Vertex> ready;
  for (std::size_t v = 0; v < n_; ++v) {
    indegree[v] = bits::count(in_row(static_cast<Vertex>(v)));
    if (indegree[v] == 0) ready.push_back(static_cast<Vertex>(v));
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    bits::for_each(out_row(v), [&](std::size_t w) {
      if (--indegree[w] == 0) ready.push_back(static_cast<Vertex>(w));
    });
  }
  return removed == n_;
}

Digraph Digraph::contract_pairs(std::span<const Arc> pairs) const {
  std::vector<std::size_t> owner(n_, pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Vertex x : {pairs[i].first, pairs[i].second}) {
      check_vertex(x);
      if (owner[x] != pairs.size())
        throw std::invalid_argument("vertex " + std::to_string(x) + " appears in more than one contracted pair");
      owner[x] = i;
    }
  }
  Digraph result(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Vertex x : {pairs[i].first, pairs[i].second}) {
      bits::for_each(out_row(x), [&](std::size_t y) {
        const std::size_t j = owner[y];
        if (j != pairs.size() && j != i) result.insert_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
      });
    }
  }
  return result;
}

Digraph Digraph::with_arc(Vertex u, Vertex v) const {
  Digraph copy = *this;
  copy.insert_arc(u, v);
  return copy;
}

bool DigraphBuilder::add_arc(Vertex u, Vertex v) { return graph_.insert_arc(u, v); }

Digraph complete_digraph(std::size_t n) {
  DigraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) b.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return std::move(b).freeze();
}

Digraph directed_cycle(std::size_t k) {
  if (k < 2) throw std::invalid_argument("a directed cycle needs at least 2 vertices");
  DigraphBuilder b(k);
  for (std::size_t i = 0; i < k; ++i) b.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % k));
  return std::move(b).freeze();
}

}  // namespace dicore
