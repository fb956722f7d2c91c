#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dicore/digraph.hpp"
#include "dicore/homomorphism.hpp"
#include "dicore/stats.hpp"

// Seeded Monte Carlo harnesses for D(n, p).
//
// Work is split into units (one trial, or one block of samples) and unit u of
// the n-th entry of the n-list draws from Stream({seed, (n_index << 40) | u}).
// Units are reduced in index order, so output is identical for any worker
// count. Streams do not depend on p, so cells that differ only in p are
// coupled: each trial's digraph grows monotonically with p.
namespace dicore::experiments {

struct ExperimentSpec {
  std::string id;
  std::vector<std::size_t> n;
  std::vector<double> p;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t k = 0;        // subset size (subset-arcs) or pair count (pair-contraction)
  std::size_t samples = 0;  // pairs per trial (common-neighbors) or draws (tail-vs-bound)
  std::uint64_t budget = kDefaultSearchBudget;
  std::vector<double> scales;      // threshold-sweep: p = scale * n^(-1/m(C)); empty means use p
  std::optional<Digraph> pattern;  // threshold-sweep pattern C
  std::size_t binomial_n = 0;      // tail-vs-bound: Bin(binomial_n, p); 0 means n(n-1)
  std::size_t t_points = 20;
  double t_max = 0.0;              // 0 means five standard deviations
  std::string source = "binomial";  // tail-vs-bound: "binomial" or "neighbors"
  unsigned workers = 0;             // 0 means hardware concurrency
};

// Experiment identifiers accepted by default_spec / run_csv.
const std::vector<std::string>& experiment_ids();

// Defaults for each experiment id; std::invalid_argument for an unknown id.
ExperimentSpec default_spec(std::string_view id);

// Overlays a JSON object on default_spec(id). Keys: n, p (number or array),
// trials, seed, k, samples, budget, scales, pattern (digraph text),
// binomial_n, t_points, t_max, source, workers. Unknown keys and bad values
// raise std::invalid_argument.
ExperimentSpec spec_from_json(std::string_view id, std::string_view json);

// Throws std::invalid_argument if the spec violates its invariants
// (trials >= 1, probabilities in [0, 1], sizes in range for the experiment).
void validate(const ExperimentSpec& spec);

// Lower edge n^(-1/9) ln^2 n of the probability window in which the
// concentration estimates hold; the window is (lower, 1 - lower).
double window_lower_edge(std::size_t n);
bool window_satisfied(std::size_t n, double p);
// n^(1/9) ln^2 n / 2 and n^(1/9) ln^2 n.
double k0(std::size_t n);
double k1(std::size_t n);

struct StatRow {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t k = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  StatSummary summary;      // over every recorded object in every trial
  RunningStats trial_means; // over the per-trial means
  std::optional<double> median;
  bool window = false;
};

// |N(v)| for every vertex; reference (n-1)(2p - p^2).
std::vector<StatRow> exp_neighbors(const ExperimentSpec& spec);

// |N(u) & N(v)| for `samples` uniformly drawn pairs per trial; reference
// (n-2) p^2 (2-p)^2.
std::vector<StatRow> exp_common_neighbors(const ExperimentSpec& spec);

// Size of a maximum acyclic vertex set per trial; reference n^(1/9), which
// is only meaningful asymptotically.
std::vector<StatRow> exp_max_acyclic(const ExperimentSpec& spec);

// Arcs induced by a uniform k-subset; reference 2 p C(k, 2).
std::vector<StatRow> exp_subset_arcs(const ExperimentSpec& spec);

// Arcs of contract_pairs over k uniform disjoint pairs; reference
// 2 C(k, 2) (1 - (1-p)^4).
std::vector<StatRow> exp_pair_contraction(const ExperimentSpec& spec);

struct ThresholdRow {
  std::size_t n = 0;
  double p = 0.0;
  double scale = 0.0;      // p / threshold
  double threshold = 0.0;  // n^(-1/m(C))
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t contained = 0;
  std::size_t unknown = 0;
  double expected_copies = 0.0;  // (n)_v p^a / |Aut(C)|; NaN when |V(C)| > 8

  double frequency() const { return static_cast<double>(contained) / static_cast<double>(trials); }
};

std::vector<ThresholdRow> exp_threshold_sweep(const ExperimentSpec& spec);

struct CoreRow {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::size_t core = 0;
  std::size_t not_core = 0;
  std::size_t unknown = 0;
  std::uint64_t nodes = 0;
  bool window = false;

  double core_frequency() const { return static_cast<double>(core) / static_cast<double>(trials); }
  double unknown_frequency() const { return static_cast<double>(unknown) / static_cast<double>(trials); }
};

std::vector<CoreRow> exp_core_fraction(const ExperimentSpec& spec);

struct TailRow {
  std::size_t binomial_n = 0;
  double p = 0.0;
  double mean = 0.0;
  double t = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double upper_frequency = 0.0;  // P(X >= mean + t)
  double upper_rate_bound = 1.0;
  double upper_quadratic_bound = 1.0;
  double lower_frequency = 0.0;  // P(X <= mean - t)
  double lower_rate_bound = 1.0;
  double lower_quadratic_bound = 1.0;

  // Standard error of a frequency whose true probability is at most `bound`.
  double standard_error(double bound) const;
  bool upper_within(double sigmas) const;
  bool lower_within(double sigmas) const;
};

std::vector<TailRow> exp_tail_vs_bound(const ExperimentSpec& spec);

// Runs spec.id and renders its CSV table (header line plus one row per
// cell). Numbers use printf %.10g.
std::string run_csv(const ExperimentSpec& spec);

std::string to_csv(const std::string& id, const std::vector<StatRow>& rows);
std::string to_csv(const std::vector<ThresholdRow>& rows);
std::string to_csv(const std::vector<CoreRow>& rows);
std::string to_csv(const std::vector<TailRow>& rows);

}  // namespace dicore::experiments
