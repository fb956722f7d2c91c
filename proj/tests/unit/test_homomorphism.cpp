#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dicore/homomorphism.hpp"
#include "dicore/random_model.hpp"
#include "oracles.hpp"

using dicore::CoreStatus;
using dicore::Digraph;
using dicore::SearchStatus;
using dicore::Vertex;
using dicore::VertexMap;

namespace {

const Digraph single(1);
const Digraph arc(2, {{0, 1}});
const Digraph two_cycle = dicore::directed_cycle(2);
const Digraph three_cycle = dicore::directed_cycle(3);

// Does any map [from] -> [to] pass the definition?
bool oracle_hom_exists(const Digraph& from, const Digraph& to) {
  const auto a = oracle::adjacency(from);
  const auto b = oracle::adjacency(to);
  bool found = false;
  oracle::for_each_map(from.vertex_count(), to.vertex_count(), [&](const std::vector<std::uint32_t>& m) {
    if (!found && oracle::is_acyclic_hom(a, b, m)) found = true;
  });
  return found;
}

bool oracle_contains(const Digraph& host, const Digraph& pattern) {
  bool found = false;
  oracle::for_each_map(pattern.vertex_count(), host.vertex_count(), [&](const std::vector<std::uint32_t>& m) {
    if (found || !oracle::injective(m)) return;
    for (const auto& [u, v] : pattern.arcs())
      if (!host.has_arc(m[u], m[v])) return;
    found = true;
  });
  return found;
}

}  // namespace

TEST_CASE("vertex maps") {
  CHECK_THROWS_AS(VertexMap(2, 2, {0}), std::out_of_range);
  CHECK_THROWS_AS(VertexMap(2, 2, {0, 2}), std::out_of_range);
  const VertexMap m(4, 3, {2, 0, 2, 1});
  CHECK(m.fiber(2) == std::vector<Vertex>{0, 2});
  CHECK(m.fiber(1) == std::vector<Vertex>{3});
  CHECK_FALSE(m.is_injective());
  CHECK(VertexMap::identity(5).is_injective());
  const VertexMap second(3, 2, {1, 1, 0});
  CHECK(dicore::compose(m, second) == VertexMap(4, 2, {0, 1, 0, 1}));
}

TEST_CASE("verify_acyclic_hom") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Digraph d = dicore::sample(7, 0.4, {s, 0});
    CHECK(dicore::verify_acyclic_hom(d, d, VertexMap::identity(7)));
  }
  CHECK(dicore::verify_acyclic_hom(arc, single, VertexMap::constant(2, 1, 0)));
  CHECK_FALSE(dicore::verify_acyclic_hom(two_cycle, single, VertexMap::constant(2, 1, 0)));
  CHECK_THROWS_AS(dicore::verify_acyclic_hom(arc, single, VertexMap::identity(2)), std::invalid_argument);
}

TEST_CASE("verify_acyclic_hom matches the definition on all small pairs") {
  for (const Digraph& from : dicore::enumerate_all(3))
    for (const Digraph& to : dicore::enumerate_all(2)) {
      const auto a = oracle::adjacency(from);
      const auto b = oracle::adjacency(to);
      oracle::for_each_map(3, 2, [&](const std::vector<std::uint32_t>& m) {
        CHECK(dicore::verify_acyclic_hom(from, to, VertexMap(3, 2, m)) == oracle::is_acyclic_hom(a, b, m));
      });
    }
}

TEST_CASE("find_acyclic_hom examples") {
  const auto r = dicore::find_acyclic_hom(Digraph(3), single);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK(*r.map == VertexMap::constant(3, 1, 0));
  CHECK(dicore::find_acyclic_hom(two_cycle, single).status == SearchStatus::NotFound);
  // 0,1 -> 0 and 2 -> 1 works: the fiber {0,1} carries a single arc.
  const auto folded = dicore::find_acyclic_hom(three_cycle, two_cycle);
  REQUIRE(folded.status == SearchStatus::Found);
  CHECK(dicore::verify_acyclic_hom(three_cycle, two_cycle, VertexMap(3, 2, {0, 0, 1})));
  CHECK(dicore::find_acyclic_hom(three_cycle, single).status == SearchStatus::NotFound);
  CHECK(dicore::find_acyclic_hom(Digraph(0), Digraph(0)).status == SearchStatus::Found);
  CHECK(dicore::find_acyclic_hom(Digraph(2), Digraph(0)).status == SearchStatus::NotFound);
}

TEST_CASE("find_acyclic_hom is sound and complete on random small pairs") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    dicore::Stream rng({s, 123});
    const std::size_t n = 1 + rng.below(5);
    const std::size_t m = 1 + rng.below(4);
    const Digraph from = dicore::sample(n, 0.5, {s, 1});
    const Digraph to = dicore::sample(m, 0.6, {s, 2});
    const auto r = dicore::find_acyclic_hom(from, to);
    CHECK(r.status != SearchStatus::BudgetExceeded);
    if (r.status == SearchStatus::Found) CHECK(dicore::verify_acyclic_hom(from, to, *r.map));
    CHECK((r.status == SearchStatus::Found) == oracle_hom_exists(from, to));
  }
}

TEST_CASE("find_noninjective_endomorphism examples") {
  const auto r = dicore::find_noninjective_endomorphism(arc);
  REQUIRE(r.status == SearchStatus::Found);
  CHECK_FALSE(r.map->is_injective());
  CHECK(r.map->image()[0] == r.map->image()[1]);
  CHECK(dicore::find_noninjective_endomorphism(two_cycle).status == SearchStatus::NotFound);
  CHECK(dicore::find_noninjective_endomorphism(three_cycle).status == SearchStatus::NotFound);
}

TEST_CASE("is_core named cases") {
  CHECK(dicore::is_core(single).status == CoreStatus::Core);
  const auto v = dicore::is_core(arc);
  REQUIRE(v.status == CoreStatus::NotCore);
  CHECK(v.witness->image()[0] == v.witness->image()[1]);
  CHECK(dicore::is_core(two_cycle).status == CoreStatus::Core);
  CHECK(dicore::is_core(three_cycle).status == CoreStatus::Core);
  CHECK(dicore::is_core(Digraph(0)).status == CoreStatus::Core);
  CHECK(dicore::is_core(dicore::complete_digraph(4)).status == CoreStatus::Core);
}

TEST_CASE("is_core agrees with exhaustive enumeration for n <= 4") {
  std::size_t disagreements = 0, cores = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    dicore::for_each_digraph(n, [&](const Digraph& d) {
      const auto v = dicore::is_core(d);
      const bool expected = oracle::is_core(d);
      if ((v.status == CoreStatus::Core) != expected || v.status == CoreStatus::Unknown) ++disagreements;
      if (v.status == CoreStatus::NotCore) {
        CHECK(dicore::verify_acyclic_hom(d, d, *v.witness));
        CHECK_FALSE(v.witness->is_injective());
      }
      if (expected) ++cores;
    });
  CHECK(disagreements == 0);
  CHECK(cores > 0);
}

TEST_CASE("is_core agrees with exhaustive enumeration on random digraphs with n = 5, 6") {
  for (std::uint64_t s = 0; s < 120; ++s) {
    const std::size_t n = s < 90 ? 5 : 6;
    const Digraph d = dicore::sample(n, 0.3 + 0.05 * static_cast<double>(s % 8), {s, 60});
    CHECK((dicore::is_core(d).status == CoreStatus::Core) == oracle::is_core(d));
  }
}

TEST_CASE("injective acyclic endomorphisms are automorphisms") {
  for (std::size_t n = 1; n <= 4; ++n)
    dicore::for_each_digraph(n, [&](const Digraph& d) {
      oracle::for_each_map(n, n, [&](const std::vector<std::uint32_t>& m) {
        if (!oracle::injective(m)) return;
        const VertexMap rho(n, n, m);
        if (dicore::verify_acyclic_hom(d, d, rho)) CHECK(dicore::is_automorphism(d, rho));
      });
    });
}

TEST_CASE("is_automorphism") {
  CHECK(dicore::is_automorphism(three_cycle, VertexMap::identity(3)));
  CHECK(dicore::is_automorphism(three_cycle, VertexMap(3, 3, {1, 2, 0})));
  CHECK_FALSE(dicore::is_automorphism(three_cycle, VertexMap(3, 3, {1, 0, 2})));
  CHECK_FALSE(dicore::is_automorphism(arc, VertexMap(2, 2, {1, 0})));
  CHECK_FALSE(dicore::is_automorphism(arc, VertexMap::constant(2, 2, 0)));
  CHECK_THROWS_AS(dicore::is_automorphism(arc, VertexMap::identity(3)), std::invalid_argument);
}

TEST_CASE("composition of found homomorphisms") {
  int composed = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Digraph d = dicore::sample(6, 0.3, {s, 10});
    const Digraph c = dicore::sample(4, 0.5, {s, 11});
    const Digraph e = dicore::sample(3, 0.6, {s, 12});
    const auto rho = dicore::find_acyclic_hom(d, c);
    const auto sigma = dicore::find_acyclic_hom(c, e);
    if (rho.status != SearchStatus::Found || sigma.status != SearchStatus::Found) continue;
    ++composed;
    const VertexMap both = dicore::compose(*rho.map, *sigma.map);
    // Condition (i) survives composition.
    for (const auto& [u, v] : d.arcs())
      CHECK((both(u) == both(v) || e.has_arc(both(u), both(v))));
    // Condition (ii) is checked on the composite fibers directly.
    const auto a = oracle::adjacency(d);
    bool fibers_acyclic = true;
    for (Vertex t = 0; t < 3; ++t) {
      std::vector<bool> fiber(6);
      for (Vertex v = 0; v < 6; ++v) fiber[v] = both(v) == t;
      if (oracle::has_cycle(a, fiber)) fibers_acyclic = false;
    }
    CHECK(dicore::verify_acyclic_hom(d, e, both) == fibers_acyclic);
  }
  CHECK(composed > 10);
}

TEST_CASE("iterating a non-core witness shrinks the image") {
  int witnesses = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Digraph d = dicore::sample(8, 0.35, {s, 20});
    const auto v = dicore::is_core(d);
    if (v.status != CoreStatus::NotCore) continue;
    ++witnesses;
    const VertexMap& rho = *v.witness;
    std::set<Vertex> image(rho.image().begin(), rho.image().end());
    VertexMap power = rho;
    for (int i = 0; i < 10; ++i) {
      power = dicore::compose(power, rho);
      std::set<Vertex> next(power.image().begin(), power.image().end());
      CHECK(next.size() <= image.size());
      image = std::move(next);
    }
    CHECK(image.size() < d.vertex_count());
  }
  CHECK(witnesses > 10);
}

TEST_CASE("subdigraph_contains") {
  CHECK(dicore::subdigraph_contains(two_cycle, two_cycle).status == SearchStatus::Found);
  CHECK(dicore::subdigraph_contains(Digraph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}}), three_cycle).status ==
        SearchStatus::NotFound);
  CHECK(dicore::subdigraph_contains(dicore::complete_digraph(2), arc).status == SearchStatus::Found);
  CHECK(dicore::subdigraph_contains(arc, Digraph(3)).status == SearchStatus::NotFound);
  for (std::uint64_t s = 0; s < 300; ++s) {
    const Digraph host = dicore::sample(5, 0.35, {s, 30});
    const Digraph pattern = dicore::sample(3, 0.5, {s, 31});
    const auto r = dicore::subdigraph_contains(host, pattern);
    CHECK((r.status == SearchStatus::Found) == oracle_contains(host, pattern));
    if (r.status == SearchStatus::Found) {
      CHECK(r.map->is_injective());
      for (const auto& [u, v] : pattern.arcs()) CHECK(host.has_arc((*r.map)(u), (*r.map)(v)));
    }
  }
}

TEST_CASE("budget exhaustion is reported, never coerced") {
  const Digraph d = dicore::sample(16, 0.5, {3, 40});
  const auto v = dicore::is_core(d, 3);
  CHECK(v.status == CoreStatus::Unknown);
  CHECK_FALSE(v.witness.has_value());
  CHECK(dicore::find_acyclic_hom(d, dicore::sample(6, 0.5, {3, 41}), 2).status == SearchStatus::BudgetExceeded);
  const auto full = dicore::is_core(d);
  CHECK(full.status != CoreStatus::Unknown);
  CHECK(full.nodes > 3);
}
