#include "dicore/homomorphism.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>

namespace dicore {

VertexMap::VertexMap(std::size_t source_size, std::size_t target_size, std::vector<Vertex> image)
    : target_size_(target_size), image_(std::move(image)) {
  if (image_.size() != source_size)
    throw std::out_of_range("vertex map has " + std::to_string(image_.size()) + " entries, expected " +
                            std::to_string(source_size));
  for (Vertex t : image_)
    if (t >= target_size_)
      throw std::out_of_range("image vertex " + std::to_string(t) + " outside target of size " +
                              std::to_string(target_size_));
}

VertexMap VertexMap::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Vertex>(i);
  return VertexMap(n, n, std::move(image));
}

VertexMap VertexMap::constant(std::size_t source_size, std::size_t target_size, Vertex value) {
  return VertexMap(source_size, target_size, std::vector<Vertex>(source_size, value));
}

std::vector<Vertex> VertexMap::fiber(Vertex t) const {
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] == t) members.push_back(static_cast<Vertex>(v));
  return members;
}

bool VertexMap::is_injective() const {
  std::vector<bool> hit(target_size_, false);
  for (Vertex t : image_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

VertexMap compose(const VertexMap& first, const VertexMap& second) {
  if (first.target_size() != second.source_size())
    throw std::invalid_argument("cannot compose maps with mismatched middle dimension");
  std::vector<Vertex> image(first.source_size());
  for (std::size_t v = 0; v < image.size(); ++v) image[v] = second(first(static_cast<Vertex>(v)));
  return VertexMap(first.source_size(), second.target_size(), std::move(image));
}

bool verify_acyclic_hom(const Digraph& from, const Digraph& to, const VertexMap& rho) {
  if (rho.source_size() != from.vertex_count() || rho.target_size() != to.vertex_count())
    throw std::invalid_argument("vertex map dimensions do not match the digraphs");
  DigraphBuilder within_fibers(from.vertex_count());
  for (const auto& [u, v] : from.arcs()) {
    const Vertex ru = rho(u), rv = rho(v);
    if (ru == rv)
      within_fibers.add_arc(u, v);
    else if (!to.has_arc(ru, rv))
      return false;
  }
  // The fibers are disjoint, so they are all acyclic iff their union is.
  return std::move(within_fibers).freeze().is_acyclic();
}

namespace {

constexpr Vertex kUnassigned = std::numeric_limits<Vertex>::max();

// Forward-checking backtracking over maps source -> target.
//
// Acyclic mode allows u, v to share an image and enforces fiber acyclicity
// as vertices are placed: adding x to fiber F creates a cycle iff some arc
// leaving x reaches, inside F, a vertex with an arc back into x. Injective
// mode is plain arc-preserving embedding with all-different images.
class HomSearch {
 public:
  enum class Mode { Acyclic, Injective };

  HomSearch(const Digraph& source, const Digraph& target, Mode mode, std::uint64_t budget, std::uint64_t& nodes)
      : source_(source),
        target_(target),
        mode_(mode),
        budget_(budget),
        nodes_(nodes),
        ns_(source.vertex_count()),
        nt_(target.vertex_count()),
        ws_(bits::words_for(ns_)),
        wt_(bits::words_for(nt_)),
        forbidden_(ns_),
        degree_(ns_) {
    out_allowed_.assign(nt_ * wt_, 0);
    in_allowed_.assign(nt_ * wt_, 0);
    for (std::size_t t = 0; t < nt_; ++t) {
      auto out = target_.out_row(static_cast<Vertex>(t));
      auto in = target_.in_row(static_cast<Vertex>(t));
      std::copy(out.begin(), out.end(), out_allowed_.begin() + static_cast<std::ptrdiff_t>(t * wt_));
      std::copy(in.begin(), in.end(), in_allowed_.begin() + static_cast<std::ptrdiff_t>(t * wt_));
      if (mode_ == Mode::Acyclic) {
        bits::set(row(out_allowed_, t, wt_), t);
        bits::set(row(in_allowed_, t, wt_), t);
      }
    }
    for (std::size_t v = 0; v < ns_; ++v)
      degree_[v] = source_.out_degree(static_cast<Vertex>(v)) + source_.in_degree(static_cast<Vertex>(v));
  }

  void forbid_merge(Vertex a, Vertex b) {
    forbidden_[a].push_back(b);
    forbidden_[b].push_back(a);
  }

  bool exhausted() const noexcept { return exhausted_; }

  // Searches for a map extending `fixed` (pairs of source -> target).
  std::optional<std::vector<Vertex>> solve(std::span<const Arc> fixed) {
    reset();
    std::size_t level = 0;
    for (const auto& [x, t] : fixed) {
      if (!spend()) return std::nullopt;
      if (assignment_[x] != kUnassigned) {
        if (assignment_[x] != t) return std::nullopt;
        continue;
      }
      if (!bits::test(domain(level, x), t) || !fiber_accepts(x, t)) return std::nullopt;
      if (!assign(level, x, t)) return std::nullopt;
      ++level;
    }
    if (descend(level)) return assignment_;
    return std::nullopt;
  }

 private:
  static std::span<bits::Word> row(std::vector<bits::Word>& flat, std::size_t i, std::size_t words) {
    return {flat.data() + i * words, words};
  }

  std::span<bits::Word> domain(std::size_t level, std::size_t v) { return row(levels_[level], v, wt_); }

  bool spend() {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  void reset() {
    exhausted_ = false;
    assignment_.assign(ns_, kUnassigned);
    fibers_.assign(mode_ == Mode::Acyclic ? nt_ * ws_ : 0, 0);
    levels_.assign(ns_ + 1, {});
    levels_[0].assign(ns_ * wt_, 0);
    for (std::size_t v = 0; v < ns_; ++v) {
      auto dom = domain(0, v);
      for (std::size_t t = 0; t < nt_; ++t)
        if (mode_ == Mode::Acyclic || degrees_fit(static_cast<Vertex>(v), static_cast<Vertex>(t)))
          bits::set(dom, t);
    }
  }

  bool degrees_fit(Vertex v, Vertex t) const {
    return source_.out_degree(v) <= target_.out_degree(t) && source_.in_degree(v) <= target_.in_degree(t);
  }

  bool fiber_accepts(Vertex x, Vertex t) {
    if (mode_ != Mode::Acyclic) return true;
    auto fiber = row(fibers_, t, ws_);
    if (!bits::any(fiber)) return true;
    auto out = source_.out_row(x);
    auto in = source_.in_row(x);
    reach_.assign(ws_, 0);
    frontier_.assign(ws_, 0);
    for (std::size_t w = 0; w < ws_; ++w) reach_[w] = frontier_[w] = out[w] & fiber[w];
    while (bits::any(frontier_)) {
      for (std::size_t w = 0; w < ws_; ++w)
        if (reach_[w] & in[w]) return false;
      next_.assign(ws_, 0);
      bits::for_each(std::span<const bits::Word>(frontier_), [&](std::size_t u) {
        auto ou = source_.out_row(static_cast<Vertex>(u));
        for (std::size_t w = 0; w < ws_; ++w) next_[w] |= ou[w] & fiber[w];
      });
      for (std::size_t w = 0; w < ws_; ++w) {
        frontier_[w] = next_[w] & ~reach_[w];
        reach_[w] |= frontier_[w];
      }
    }
    return true;
  }

  // Places x at t and prunes the domains at level + 1. Returns false when
  // some unassigned vertex is left without candidates. The caller undoes the
  // placement with unassign() either way.
  bool assign(std::size_t level, Vertex x, Vertex t) {
    assignment_[x] = t;
    if (mode_ == Mode::Acyclic) bits::set(row(fibers_, t, ws_), x);
    levels_[level + 1] = levels_[level];

    auto out_ok = row(out_allowed_, t, wt_);
    auto in_ok = row(in_allowed_, t, wt_);
    auto sx_out = source_.out_row(x);
    auto sx_in = source_.in_row(x);

    for (std::size_t w = 0; w < ns_; ++w) {
      if (assignment_[w] != kUnassigned) continue;
      const bool to_w = bits::test(sx_out, w);
      const bool from_w = bits::test(sx_in, w);
      const bool restricted = to_w || from_w || mode_ == Mode::Injective;
      if (!restricted) continue;
      auto dom = domain(level + 1, w);
      if (to_w)
        for (std::size_t k = 0; k < wt_; ++k) dom[k] &= out_ok[k];
      if (from_w)
        for (std::size_t k = 0; k < wt_; ++k) dom[k] &= in_ok[k];
      // Injective images are distinct; an anti-parallel pair can never share a fiber.
      if (mode_ == Mode::Injective || (to_w && from_w)) bits::reset(dom, t);
      if (!bits::any(dom)) return false;
    }
    for (Vertex w : forbidden_[x]) {
      if (assignment_[w] != kUnassigned) {
        if (assignment_[w] == t) return false;
        continue;
      }
      auto dom = domain(level + 1, w);
      bits::reset(dom, t);
      if (!bits::any(dom)) return false;
    }
    return true;
  }

  void unassign(Vertex x) {
    if (mode_ == Mode::Acyclic) bits::reset(row(fibers_, assignment_[x], ws_), x);
    assignment_[x] = kUnassigned;
  }

  // Unassigned vertex with the fewest candidates; ties go to higher degree,
  // then lower index. Returns kUnassigned when the map is complete.
  Vertex select(std::size_t level) {
    Vertex best = kUnassigned;
    std::size_t best_size = 0;
    for (std::size_t v = 0; v < ns_; ++v) {
      if (assignment_[v] != kUnassigned) continue;
      const std::size_t size = bits::count(domain(level, v));
      if (best == kUnassigned || size < best_size || (size == best_size && degree_[v] > degree_[best])) {
        best = static_cast<Vertex>(v);
        best_size = size;
      }
    }
    return best;
  }

  bool descend(std::size_t level) {
    const Vertex x = select(level);
    if (x == kUnassigned) return true;
    // levels_[level] is not written below this frame, so the row is stable.
    auto dom = domain(level, x);
    for (std::size_t k = 0; k < wt_; ++k) {
      bits::Word word = dom[k];
      while (word != 0) {
        const auto t = static_cast<Vertex>(k * bits::kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
        if (!spend()) return false;
        if (!fiber_accepts(x, t)) continue;
        const bool consistent = assign(level, x, t);
        if (consistent && descend(level + 1)) return true;
        unassign(x);
        if (exhausted_) return false;
      }
    }
    return false;
  }

  const Digraph& source_;
  const Digraph& target_;
  Mode mode_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::size_t ns_, nt_, ws_, wt_;
  bool exhausted_ = false;

  std::vector<bits::Word> out_allowed_;  // per target t: images allowed for an out-neighbour of a vertex at t
  std::vector<bits::Word> in_allowed_;
  std::vector<std::vector<Vertex>> forbidden_;
  std::vector<std::size_t> degree_;

  std::vector<Vertex> assignment_;
  std::vector<bits::Word> fibers_;  // per target t: source vertices currently mapped to t
  std::vector<std::vector<bits::Word>> levels_;
  std::vector<bits::Word> reach_, frontier_, next_;
};

SearchResult finish(std::optional<std::vector<Vertex>> found, const HomSearch& search, std::size_t ns,
                    std::size_t nt, std::uint64_t nodes) {
  SearchResult r;
  r.nodes = nodes;
  if (found) {
    r.status = SearchStatus::Found;
    r.map = VertexMap(ns, nt, std::move(*found));
  } else {
    r.status = search.exhausted() ? SearchStatus::BudgetExceeded : SearchStatus::NotFound;
  }
  return r;
}

}  // namespace

SearchResult find_acyclic_hom(const Digraph& from, const Digraph& to, std::uint64_t budget) {
  std::uint64_t nodes = 0;
  if (from.vertex_count() > 0 && to.vertex_count() == 0) return {SearchStatus::NotFound, std::nullopt, 0};
  HomSearch search(from, to, HomSearch::Mode::Acyclic, budget, nodes);
  auto found = search.solve({});
  return finish(std::move(found), search, from.vertex_count(), to.vertex_count(), nodes);
}

SearchResult find_noninjective_endomorphism(const Digraph& d, std::uint64_t budget) {
  const std::size_t n = d.vertex_count();
  std::uint64_t nodes = 0;

  std::vector<std::tuple<std::size_t, Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) pairs.emplace_back(d.common_neighbor_count(x, y), x, y);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });

  HomSearch search(d, d, HomSearch::Mode::Acyclic, budget, nodes);
  for (const auto& [common, x, y] : pairs) {
    // An anti-parallel pair would form a cyclic fiber.
    if (d.has_arc(x, y) && d.has_arc(y, x)) {
      search.forbid_merge(x, y);
      continue;
    }
    for (Vertex z = 0; z < n; ++z) {
      const Arc fixed[] = {{x, z}, {y, z}};
      auto found = search.solve(fixed);
      if (found) return finish(std::move(found), search, n, n, nodes);
      if (search.exhausted()) return {SearchStatus::BudgetExceeded, std::nullopt, nodes};
    }
    search.forbid_merge(x, y);
  }
  return {SearchStatus::NotFound, std::nullopt, nodes};
}

CoreVerdict is_core(const Digraph& d, std::uint64_t budget) {
  auto r = find_noninjective_endomorphism(d, budget);
  switch (r.status) {
    case SearchStatus::Found:
      return {CoreStatus::NotCore, std::move(r.map), r.nodes};
    case SearchStatus::NotFound:
      return {CoreStatus::Core, std::nullopt, r.nodes};
    case SearchStatus::BudgetExceeded:
      break;
  }
  return {CoreStatus::Unknown, std::nullopt, r.nodes};
}

bool is_automorphism(const Digraph& d, const VertexMap& rho) {
  const std::size_t n = d.vertex_count();
  if (rho.source_size() != n || rho.target_size() != n)
    throw std::invalid_argument("automorphism candidate must map V(D) to V(D)");
  if (!rho.is_injective()) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && d.has_arc(u, v) != d.has_arc(rho(u), rho(v))) return false;
  return true;
}

SearchResult subdigraph_contains(const Digraph& host, const Digraph& pattern, std::uint64_t budget) {
  std::uint64_t nodes = 0;
  if (pattern.vertex_count() > host.vertex_count()) return {SearchStatus::NotFound, std::nullopt, 0};
  HomSearch search(pattern, host, HomSearch::Mode::Injective, budget, nodes);
  auto found = search.solve({});
  return finish(std::move(found), search, pattern.vertex_count(), host.vertex_count(), nodes);
}

}  // namespace dicore
