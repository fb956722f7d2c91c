#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dicore/acyclic_set.hpp"
#include "dicore/errors.hpp"
#include "dicore/parallel.hpp"
#include "dicore/random.hpp"
#include "dicore/random_model.hpp"
#include "dicore/rational.hpp"
#include "dicore/stats.hpp"
#include "oracles.hpp"

using dicore::Digraph;
using dicore::Rational;
using dicore::RunningStats;

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rational(6, 3) == Rational(2, 1));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(6, 3).to_string() == "2/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("running stats") {
  RunningStats empty;
  CHECK(std::isnan(empty.mean()));
  RunningStats s;
  for (double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) s.add(x);
  CHECK(s.count() == 8);
  CHECK(s.mean() == 5.0);
  CHECK(s.min() == 2.0);
  CHECK(s.max() == 9.0);
  CHECK(s.variance() == doctest::Approx(32.0 / 7.0));
}

TEST_CASE("merging partial stats matches one pass") {
  dicore::Stream rng({8, 8});
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(1e6 + rng.uniform01() * 100);
  RunningStats whole;
  for (double x : xs) whole.add(x);
  for (std::size_t parts : {2, 3, 7, 64}) {
    std::vector<RunningStats> partial(parts);
    for (std::size_t i = 0; i < xs.size(); ++i) partial[i * parts / xs.size()].add(xs[i]);
    // Merge as a balanced tree and as a left fold.
    RunningStats fold;
    for (const auto& p : partial) fold.merge(p);
    while (partial.size() > 1) {
      std::vector<RunningStats> next;
      for (std::size_t i = 0; i < partial.size(); i += 2) {
        RunningStats m = partial[i];
        if (i + 1 < partial.size()) m.merge(partial[i + 1]);
        next.push_back(m);
      }
      partial = std::move(next);
    }
    for (const RunningStats* m : {&fold, &partial.front()}) {
      CHECK(m->count() == whole.count());
      CHECK(m->min() == whole.min());
      CHECK(m->max() == whole.max());
      CHECK(std::fabs(m->mean() - whole.mean()) < 1e-9 * std::fabs(whole.mean()));
      CHECK(m->variance() == doctest::Approx(whole.variance()).epsilon(1e-9));
    }
  }
  RunningStats a = whole;
  a.merge(RunningStats{});
  CHECK(a.mean() == whole.mean());
}

TEST_CASE("parallel_map keeps index order and propagates errors") {
  for (unsigned workers : {1u, 2u, 8u}) {
    const auto out = dicore::parallel_map<std::size_t>(1000, workers, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == i * i);
  }
  CHECK_THROWS_AS(dicore::parallel_map<int>(50, 4,
                                            [](std::size_t i) -> int {
                                              if (i == 17) throw std::runtime_error("boom");
                                              return 0;
                                            }),
                  std::runtime_error);
  CHECK(dicore::parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
}

TEST_CASE("maximum acyclic set") {
  CHECK(dicore::maximum_acyclic_set(Digraph(9)).size() == 9);
  CHECK(dicore::maximum_acyclic_set(dicore::complete_digraph(9)).size() == 1);
  CHECK(dicore::maximum_acyclic_set(dicore::directed_cycle(6)).size() == 5);
  CHECK_THROWS_AS(dicore::maximum_acyclic_set(Digraph(41)), dicore::LimitExceeded);
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Digraph d = dicore::sample(9, 0.3 + 0.005 * static_cast<double>(s), {s, 50});
    const auto best = dicore::maximum_acyclic_set(d);
    CHECK(d.induced(best).is_acyclic());
    // Exhaustive oracle.
    const auto a = oracle::adjacency(d);
    std::size_t expected = 0;
    for (std::uint32_t mask = 1; mask < (1U << 9); ++mask) {
      std::vector<bool> keep(9);
      for (std::size_t v = 0; v < 9; ++v) keep[v] = (mask >> v) & 1;
      const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
      if (size > expected && !oracle::has_cycle(a, keep)) expected = size;
    }
    CHECK(best.size() == expected);
  }
}
