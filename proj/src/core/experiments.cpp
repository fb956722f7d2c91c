#include "dicore/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dicore/acyclic_set.hpp"
#include "dicore/bounds.hpp"
#include "dicore/density.hpp"
#include "dicore/digraph_io.hpp"
#include "dicore/parallel.hpp"
#include "dicore/random_model.hpp"
#include "json.hpp"

namespace dicore::experiments {
namespace {

constexpr std::uint64_t kAuxiliaryStream = std::uint64_t{1} << 63;
constexpr int kCellShift = 40;
constexpr std::uint64_t kTailBlock = std::uint64_t{1} << 14;

// Stream for the digraph of unit `unit` under the n_index-th vertex count.
Seed unit_seed(const ExperimentSpec& spec, std::size_t n_index, std::uint64_t unit) {
  return {spec.seed, (static_cast<std::uint64_t>(n_index) << kCellShift) | unit};
}

// Second, independent stream for the same unit (subset and pair choices).
Seed auxiliary_seed(const ExperimentSpec& spec, std::size_t n_index, std::uint64_t unit) {
  Seed s = unit_seed(spec, n_index, unit);
  s.stream |= kAuxiliaryStream;
  return s;
}

// First k entries of a Fisher-Yates shuffle of 0..n-1 driven by rng.
std::vector<Vertex> partial_shuffle(std::size_t n, std::size_t k, Stream& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(perm[i], perm[j]);
  }
  perm.resize(k);
  return perm;
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string fmt(bool b) { return b ? "true" : "false"; }

template <class T>
  requires std::is_integral_v<T>
std::string fmt(T v) {
  return std::to_string(v);
}

template <class... Ts>
std::string csv_line(const Ts&... fields) {
  std::string line;
  ((line += fmt(fields), line += ','), ...);
  line.back() = '\n';
  return line;
}

// Runs one StatRow per (n, p) cell; `trial` returns the observations of one unit.
// With with_median, the median of the per-trial means is recorded too.
template <class TrialFn, class ReferenceFn>
std::vector<StatRow> stat_cells(const ExperimentSpec& spec, TrialFn&& trial, ReferenceFn&& reference,
                                bool with_median = false) {
  validate(spec);
  std::vector<StatRow> rows;
  for (std::size_t ni = 0; ni < spec.n.size(); ++ni) {
    for (double p : spec.p) {
      const std::size_t n = spec.n[ni];
      auto per_trial = parallel_map<RunningStats>(spec.trials, spec.workers,
                                                  [&](std::size_t t) { return trial(n, p, ni, t); });
      StatRow row;
      row.n = n;
      row.p = p;
      row.k = spec.k;
      row.trials = spec.trials;
      row.seed = spec.seed;
      row.window = window_satisfied(n, p);
      row.summary.reference = reference(n, p);
      std::vector<double> means;
      for (const auto& s : per_trial) {
        row.summary.stats.merge(s);
        row.trial_means.add(s.mean());
        means.push_back(s.mean());
      }
      if (with_median) {
        std::sort(means.begin(), means.end());
        const std::size_t m = means.size();
        row.median = m % 2 == 1 ? means[m / 2] : 0.5 * (means[m / 2 - 1] + means[m / 2]);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double falling_factorial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

std::size_t automorphism_count(const Digraph& c) {
  std::vector<Vertex> perm(c.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::size_t count = 0;
  do {
    if (is_automorphism(c, VertexMap(perm.size(), perm.size(), perm))) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<double> binomial_cdf(std::size_t trials, double q) {
  std::vector<double> cdf(trials + 1);
  const double nt = static_cast<double>(trials);
  double acc = 0.0;
  for (std::size_t k = 0; k <= trials; ++k) {
    const double kd = static_cast<double>(k);
    const double log_pmf = std::lgamma(nt + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nt - kd + 1.0) +
                           kd * std::log(q) + (nt - kd) * std::log1p(-q);
    acc += std::exp(log_pmf);
    cdf[k] = std::min(acc, 1.0);
  }
  cdf.back() = 1.0;
  return cdf;
}

const ExperimentSpec& require_id(const ExperimentSpec& spec, std::string_view id) {
  if (spec.id != id) throw std::invalid_argument("spec is for experiment '" + spec.id + "', not '" + std::string(id) + "'");
  return spec;
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {"neighbors",        "common-neighbors", "max-acyclic",
                                               "subset-arcs",      "pair-contraction", "threshold-sweep",
                                               "core-fraction",    "tail-vs-bound"};
  return ids;
}

ExperimentSpec default_spec(std::string_view id) {
  ExperimentSpec s;
  s.id = std::string(id);
  s.seed = 20240101;
  if (id == "neighbors") {
    s.n = {2000};
    s.p = {0.3};
    s.trials = 200;
  } else if (id == "common-neighbors") {
    s.n = {2000};
    s.p = {0.3};
    s.trials = 200;
    s.samples = 2000;
  } else if (id == "max-acyclic") {
    s.n = {30};
    s.p = {0.3, 0.5, 0.7};
    s.trials = 20;
  } else if (id == "subset-arcs") {
    s.n = {500};
    s.p = {0.3};
    s.k = 100;
    s.trials = 500;
  } else if (id == "pair-contraction") {
    s.n = {400};
    s.p = {0.2};
    s.k = 100;
    s.trials = 500;
  } else if (id == "threshold-sweep") {
    s.n = {200};
    s.scales = {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0};
    s.trials = 1000;
    s.pattern = directed_cycle(2);
  } else if (id == "core-fraction") {
    s.n = {6, 10, 14, 18};
    s.p = {0.5};
    s.trials = 200;
  } else if (id == "tail-vs-bound") {
    s.n = {0};
    s.p = {0.3};
    s.binomial_n = 1000;
    s.samples = 1000000;
  } else {
    throw std::invalid_argument("unknown experiment '" + std::string(id) + "'");
  }
  return s;
}

ExperimentSpec spec_from_json(std::string_view id, std::string_view text) {
  ExperimentSpec s = default_spec(id);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("experiment config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("experiment config must be a JSON object");

  auto sizes = [](const nlohmann::json& v, const std::string& key) {
    std::vector<std::size_t> out;
    auto one = [&](const nlohmann::json& x) {
      if (!x.is_number_unsigned()) throw std::invalid_argument("'" + key + "' must hold non-negative integers");
      out.push_back(x.get<std::size_t>());
    };
    if (v.is_array())
      for (const auto& x : v) one(x);
    else
      one(v);
    return out;
  };
  auto reals = [](const nlohmann::json& v, const std::string& key) {
    std::vector<double> out;
    auto one = [&](const nlohmann::json& x) {
      if (!x.is_number()) throw std::invalid_argument("'" + key + "' must hold numbers");
      out.push_back(x.get<double>());
    };
    if (v.is_array())
      for (const auto& x : v) one(x);
    else
      one(v);
    return out;
  };
  auto count = [&](const nlohmann::json& v, const std::string& key) {
    auto values = sizes(v, key);
    if (values.size() != 1 || v.is_array()) throw std::invalid_argument("'" + key + "' must be a single integer");
    return values.front();
  };

  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      s.n = sizes(value, key);
    } else if (key == "p") {
      s.p = reals(value, key);
      if (!j.contains("scales")) s.scales.clear();
    } else if (key == "trials") {
      s.trials = count(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw std::invalid_argument("'seed' must be a non-negative integer");
      s.seed = value.get<std::uint64_t>();
    } else if (key == "k") {
      s.k = count(value, key);
    } else if (key == "samples") {
      s.samples = count(value, key);
    } else if (key == "budget") {
      if (!value.is_number_unsigned()) throw std::invalid_argument("'budget' must be a non-negative integer");
      s.budget = value.get<std::uint64_t>();
    } else if (key == "scales") {
      s.scales = reals(value, key);
    } else if (key == "pattern") {
      if (!value.is_string()) throw std::invalid_argument("'pattern' must be digraph text");
      s.pattern = parse_digraph(value.get<std::string>());
    } else if (key == "binomial_n") {
      s.binomial_n = count(value, key);
    } else if (key == "t_points") {
      s.t_points = count(value, key);
    } else if (key == "t_max") {
      s.t_max = reals(value, key).at(0);
    } else if (key == "source") {
      if (!value.is_string()) throw std::invalid_argument("'source' must be a string");
      s.source = value.get<std::string>();
    } else if (key == "workers") {
      s.workers = static_cast<unsigned>(count(value, key));
    } else {
      throw std::invalid_argument("unknown experiment config key '" + key + "'");
    }
  }
  validate(s);
  return s;
}

void validate(const ExperimentSpec& s) {
  auto fail = [&](const std::string& why) { throw std::invalid_argument(s.id + ": " + why); };
  default_spec(s.id);  // rejects unknown ids
  if (s.trials < 1) fail("trials must be at least 1");
  if (s.n.empty()) fail("at least one n is required");
  const bool sweep_by_scale = s.id == "threshold-sweep" && !s.scales.empty();
  if (!sweep_by_scale && s.p.empty()) fail("at least one p is required");
  for (double p : s.p)
    if (!(p >= 0.0 && p <= 1.0)) fail("p must lie in [0, 1]");
  for (std::size_t n : s.n)
    if (n > kMaxVertices) fail("n exceeds " + std::to_string(kMaxVertices));

  if (s.id == "common-neighbors") {
    for (std::size_t n : s.n)
      if (n < 2) fail("n must be at least 2");
    if (s.samples < 1) fail("samples must be at least 1");
  } else if (s.id == "max-acyclic") {
    for (std::size_t n : s.n)
      if (n > kMaxAcyclicSetVertices) fail("n exceeds the exact-search limit " + std::to_string(kMaxAcyclicSetVertices));
  } else if (s.id == "subset-arcs") {
    if (s.k < 1) fail("k must be at least 1");
    for (std::size_t n : s.n)
      if (s.k > n) fail("k = " + std::to_string(s.k) + " exceeds n = " + std::to_string(n));
  } else if (s.id == "pair-contraction") {
    if (s.k < 1) fail("k must be at least 1");
    for (std::size_t n : s.n)
      if (2 * s.k > n) fail("2k = " + std::to_string(2 * s.k) + " exceeds n = " + std::to_string(n));
  } else if (s.id == "threshold-sweep") {
    if (!s.pattern || s.pattern->arc_count() == 0) fail("the pattern needs at least one arc");
    for (double c : s.scales)
      if (!(c > 0.0)) fail("scales must be positive");
    for (std::size_t n : s.n)
      if (n < 2) fail("n must be at least 2");
  } else if (s.id == "tail-vs-bound") {
    for (double p : s.p)
      if (!(p > 0.0 && p < 1.0)) fail("p must lie strictly between 0 and 1");
    if (s.samples < 1) fail("samples must be at least 1");
    if (s.t_points < 1) fail("t_points must be at least 1");
    if (s.t_max < 0.0) fail("t_max must be non-negative");
    if (s.source != "binomial" && s.source != "neighbors") fail("source must be 'binomial' or 'neighbors'");
    if (s.source == "neighbors" || s.binomial_n == 0)
      for (std::size_t n : s.n)
        if (n < 2) fail("n must be at least 2 when sampling digraphs");
  }
}

double window_lower_edge(std::size_t n) {
  const double nd = static_cast<double>(n);
  const double l = std::log(nd);
  return std::pow(nd, -1.0 / 9.0) * l * l;
}

bool window_satisfied(std::size_t n, double p) {
  if (n < 2) return false;
  const double lo = window_lower_edge(n);
  return lo < p && p < 1.0 - lo;
}

double k1(std::size_t n) {
  const double nd = static_cast<double>(n);
  const double l = std::log(nd);
  return std::pow(nd, 1.0 / 9.0) * l * l;
}

double k0(std::size_t n) { return k1(n) / 2.0; }

std::vector<StatRow> exp_neighbors(const ExperimentSpec& spec) {
  require_id(spec, "neighbors");
  return stat_cells(
      spec,
      [&](std::size_t n, double p, std::size_t ni, std::size_t t) {
        const Digraph d = sample(n, p, unit_seed(spec, ni, t));
        RunningStats s;
        for (std::size_t v = 0; v < n; ++v) s.add(static_cast<double>(d.neighbor_count(static_cast<Vertex>(v))));
        return s;
      },
      [](std::size_t n, double p) { return (static_cast<double>(n) - 1.0) * (2.0 * p - p * p); });
}

std::vector<StatRow> exp_common_neighbors(const ExperimentSpec& spec) {
  require_id(spec, "common-neighbors");
  return stat_cells(
      spec,
      [&](std::size_t n, double p, std::size_t ni, std::size_t t) {
        const Digraph d = sample(n, p, unit_seed(spec, ni, t));
        Stream rng(auxiliary_seed(spec, ni, t));
        RunningStats s;
        for (std::size_t i = 0; i < spec.samples; ++i) {
          const auto u = static_cast<Vertex>(rng.below(n));
          auto v = static_cast<Vertex>(rng.below(n - 1));
          if (v >= u) ++v;
          s.add(static_cast<double>(d.common_neighbor_count(u, v)));
        }
        return s;
      },
      [](std::size_t n, double p) {
        return (static_cast<double>(n) - 2.0) * p * p * (2.0 - p) * (2.0 - p);
      });
}

std::vector<StatRow> exp_max_acyclic(const ExperimentSpec& spec) {
  require_id(spec, "max-acyclic");
  return stat_cells(
      spec,
      [&](std::size_t n, double p, std::size_t ni, std::size_t t) {
        RunningStats s;
        s.add(static_cast<double>(maximum_acyclic_set(sample(n, p, unit_seed(spec, ni, t))).size()));
        return s;
      },
      [](std::size_t n, double) { return std::pow(static_cast<double>(n), 1.0 / 9.0); }, true);
}

std::vector<StatRow> exp_subset_arcs(const ExperimentSpec& spec) {
  require_id(spec, "subset-arcs");
  return stat_cells(
      spec,
      [&](std::size_t n, double p, std::size_t ni, std::size_t t) {
        const Digraph d = sample(n, p, unit_seed(spec, ni, t));
        Stream rng(auxiliary_seed(spec, ni, t));
        RunningStats s;
        s.add(static_cast<double>(d.induced_arc_count(VertexSubset(n, partial_shuffle(n, spec.k, rng)))));
        return s;
      },
      [&](std::size_t, double p) {
        const double k = static_cast<double>(spec.k);
        return 2.0 * p * k * (k - 1.0) / 2.0;
      });
}

std::vector<StatRow> exp_pair_contraction(const ExperimentSpec& spec) {
  require_id(spec, "pair-contraction");
  return stat_cells(
      spec,
      [&](std::size_t n, double p, std::size_t ni, std::size_t t) {
        const Digraph d = sample(n, p, unit_seed(spec, ni, t));
        Stream rng(auxiliary_seed(spec, ni, t));
        const auto chosen = partial_shuffle(n, 2 * spec.k, rng);
        std::vector<Arc> pairs(spec.k);
        for (std::size_t i = 0; i < spec.k; ++i) pairs[i] = {chosen[2 * i], chosen[2 * i + 1]};
        RunningStats s;
        s.add(static_cast<double>(d.contract_pairs(pairs).arc_count()));
        return s;
      },
      [&](std::size_t, double p) {
        const double k = static_cast<double>(spec.k);
        return 2.0 * (k * (k - 1.0) / 2.0) * (1.0 - std::pow(1.0 - p, 4));
      });
}

std::vector<ThresholdRow> exp_threshold_sweep(const ExperimentSpec& spec) {
  require_id(spec, "threshold-sweep");
  validate(spec);
  const Digraph& pattern = *spec.pattern;
  const Rational density = max_density_exact(pattern).value();
  const std::size_t v = pattern.vertex_count();
  const double automorphisms = v <= 8 ? static_cast<double>(automorphism_count(pattern)) : 0.0;

  std::vector<ThresholdRow> rows;
  for (std::size_t ni = 0; ni < spec.n.size(); ++ni) {
    const std::size_t n = spec.n[ni];
    const double threshold =
        std::pow(static_cast<double>(n), -static_cast<double>(density.den()) / static_cast<double>(density.num()));
    std::vector<std::pair<double, double>> cells;  // (scale, p)
    if (!spec.scales.empty())
      for (double c : spec.scales) cells.emplace_back(c, std::min(1.0, c * threshold));
    else
      for (double p : spec.p) cells.emplace_back(p / threshold, p);

    for (const auto& [scale, p] : cells) {
      auto outcomes = parallel_map<SearchStatus>(spec.trials, spec.workers, [&](std::size_t t) {
        return subdigraph_contains(sample(n, p, unit_seed(spec, ni, t)), pattern, spec.budget).status;
      });
      ThresholdRow row;
      row.n = n;
      row.p = p;
      row.scale = scale;
      row.threshold = threshold;
      row.trials = spec.trials;
      row.seed = spec.seed;
      for (auto s : outcomes) {
        if (s == SearchStatus::Found) ++row.contained;
        if (s == SearchStatus::BudgetExceeded) ++row.unknown;
      }
      row.expected_copies = v <= 8 && v <= n ? falling_factorial(n, v) *
                                                   std::pow(p, static_cast<double>(pattern.arc_count())) /
                                                   automorphisms
                                             : std::numeric_limits<double>::quiet_NaN();
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<CoreRow> exp_core_fraction(const ExperimentSpec& spec) {
  require_id(spec, "core-fraction");
  validate(spec);
  std::vector<CoreRow> rows;
  for (std::size_t ni = 0; ni < spec.n.size(); ++ni) {
    for (double p : spec.p) {
      const std::size_t n = spec.n[ni];
      auto verdicts = parallel_map<std::pair<CoreStatus, std::uint64_t>>(spec.trials, spec.workers, [&](std::size_t t) {
        auto v = is_core(sample(n, p, unit_seed(spec, ni, t)), spec.budget);
        return std::make_pair(v.status, v.nodes);
      });
      CoreRow row;
      row.n = n;
      row.p = p;
      row.trials = spec.trials;
      row.seed = spec.seed;
      row.budget = spec.budget;
      row.window = window_satisfied(n, p);
      for (const auto& [status, nodes] : verdicts) {
        row.nodes += nodes;
        switch (status) {
          case CoreStatus::Core: ++row.core; break;
          case CoreStatus::NotCore: ++row.not_core; break;
          case CoreStatus::Unknown: ++row.unknown; break;
        }
      }
      rows.push_back(row);
    }
  }
  return rows;
}

double TailRow::standard_error(double bound) const {
  const double q = std::min(bound, 0.5);
  return std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
}

bool TailRow::upper_within(double sigmas) const {
  return upper_frequency <= upper_rate_bound + sigmas * standard_error(upper_rate_bound);
}

bool TailRow::lower_within(double sigmas) const {
  return lower_frequency <= lower_rate_bound + sigmas * standard_error(lower_rate_bound);
}

std::vector<TailRow> exp_tail_vs_bound(const ExperimentSpec& spec) {
  require_id(spec, "tail-vs-bound");
  validate(spec);
  const bool from_neighbors = spec.source == "neighbors";
  std::vector<TailRow> rows;

  for (std::size_t ni = 0; ni < spec.n.size(); ++ni) {
    for (double p : spec.p) {
      const std::size_t n = spec.n[ni];
      std::size_t trials_per_draw = 0;
      double q = p;
      if (from_neighbors) {
        trials_per_draw = n - 1;
        q = 2.0 * p - p * p;
      } else {
        trials_per_draw = spec.binomial_n != 0 ? spec.binomial_n : n * (n - 1);
      }

      std::vector<std::vector<std::uint64_t>> histograms;
      if (from_neighbors) {
        histograms = parallel_map<std::vector<std::uint64_t>>(spec.trials, spec.workers, [&](std::size_t t) {
          const Digraph d = sample(n, p, unit_seed(spec, ni, t));
          std::vector<std::uint64_t> h(trials_per_draw + 1, 0);
          for (std::size_t v = 0; v < n; ++v) ++h[d.neighbor_count(static_cast<Vertex>(v))];
          return h;
        });
      } else {
        const auto cdf = binomial_cdf(trials_per_draw, q);
        const std::uint64_t blocks = (spec.samples + kTailBlock - 1) / kTailBlock;
        histograms = parallel_map<std::vector<std::uint64_t>>(blocks, spec.workers, [&](std::size_t b) {
          Stream rng(unit_seed(spec, ni, b));
          std::vector<std::uint64_t> h(trials_per_draw + 1, 0);
          const std::uint64_t begin = b * kTailBlock;
          const std::uint64_t end = std::min<std::uint64_t>(spec.samples, begin + kTailBlock);
          for (std::uint64_t i = begin; i < end; ++i) {
            const double u = rng.uniform01();
            ++h[static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin())];
          }
          return h;
        });
      }

      std::vector<std::uint64_t> hist(trials_per_draw + 1, 0);
      for (const auto& h : histograms)
        for (std::size_t x = 0; x < h.size(); ++x) hist[x] += h[x];
      const std::uint64_t total = std::accumulate(hist.begin(), hist.end(), std::uint64_t{0});

      const double lambda = static_cast<double>(trials_per_draw) * q;
      const double sigma = std::sqrt(lambda * (1.0 - q));
      const double t_max = spec.t_max > 0.0 ? spec.t_max : 5.0 * sigma;
      for (std::size_t j = 0; j < spec.t_points; ++j) {
        const double t = spec.t_points == 1 ? 0.0 : t_max * static_cast<double>(j) / static_cast<double>(spec.t_points - 1);
        std::uint64_t above = 0, below = 0;
        for (std::size_t x = 0; x < hist.size(); ++x) {
          const double xd = static_cast<double>(x);
          if (xd >= lambda + t) above += hist[x];
          if (xd <= lambda - t) below += hist[x];
        }
        TailRow row;
        row.binomial_n = trials_per_draw;
        row.p = q;
        row.mean = lambda;
        row.t = t;
        row.samples = total;
        row.seed = spec.seed;
        row.upper_frequency = static_cast<double>(above) / static_cast<double>(total);
        row.lower_frequency = static_cast<double>(below) / static_cast<double>(total);
        if (lambda > 0.0) {
          const auto up = chernoff_upper(lambda, t);
          const auto lo = chernoff_lower(lambda, t);
          row.upper_rate_bound = up.rate_bound;
          row.upper_quadratic_bound = up.quadratic_bound;
          row.lower_rate_bound = lo.rate_bound;
          row.lower_quadratic_bound = lo.quadratic_bound;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string to_csv(const std::string& id, const std::vector<StatRow>& rows) {
  std::string out;
  if (id == "neighbors" || id == "common-neighbors") {
    out = "n,p,trials,seed,mean,min,max,stddev,reference,rel_dev,window_satisfied,trial_mean_min,trial_mean_max\n";
    for (const auto& r : rows) {
      const auto& s = r.summary.stats;
      out += csv_line(r.n, r.p, r.trials, r.seed, s.mean(), s.min(), s.max(), s.stddev(), r.summary.reference,
                      r.summary.relative_deviation(), r.window, r.trial_means.min(), r.trial_means.max());
    }
  } else if (id == "subset-arcs" || id == "pair-contraction") {
    out = "n,p,k,trials,seed,mean,min,max,stddev,reference,rel_dev,window_satisfied,k0,k1\n";
    for (const auto& r : rows) {
      const auto& s = r.summary.stats;
      out += csv_line(r.n, r.p, r.k, r.trials, r.seed, s.mean(), s.min(), s.max(), s.stddev(), r.summary.reference,
                      r.summary.relative_deviation(), r.window, k0(r.n), k1(r.n));
    }
  } else if (id == "max-acyclic") {
    out = "n,p,trials,seed,mean,min,max,stddev,median,reference,rel_dev,window_satisfied,asymptotic_only\n";
    for (const auto& r : rows) {
      const auto& s = r.summary.stats;
      out += csv_line(r.n, r.p, r.trials, r.seed, s.mean(), s.min(), s.max(), s.stddev(),
                      r.median.value_or(std::numeric_limits<double>::quiet_NaN()), r.summary.reference,
                      r.summary.relative_deviation(), r.window, true);
    }
  } else {
    throw std::invalid_argument("no summary table for experiment '" + id + "'");
  }
  return out;
}

std::string to_csv(const std::vector<ThresholdRow>& rows) {
  std::string out = "n,p,scale,threshold,trials,seed,contained,unknown,frequency,stderr,expected_copies\n";
  for (const auto& r : rows) {
    const double f = r.frequency();
    out += csv_line(r.n, r.p, r.scale, r.threshold, r.trials, r.seed, r.contained, r.unknown, f,
                    std::sqrt(f * (1.0 - f) / static_cast<double>(r.trials)), r.expected_copies);
  }
  return out;
}

std::string to_csv(const std::vector<CoreRow>& rows) {
  std::string out =
      "n,p,trials,seed,budget,core,not_core,unknown,core_freq,core_freq_upper,stderr,nodes,window_satisfied\n";
  for (const auto& r : rows) {
    const double f = r.core_frequency();
    out += csv_line(r.n, r.p, r.trials, r.seed, r.budget, r.core, r.not_core, r.unknown, f,
                    f + r.unknown_frequency(), std::sqrt(f * (1.0 - f) / static_cast<double>(r.trials)), r.nodes,
                    r.window);
  }
  return out;
}

std::string to_csv(const std::vector<TailRow>& rows) {
  std::string out =
      "binomial_n,p,mean,t,samples,seed,upper_freq,upper_rate_bound,upper_quadratic_bound,upper_stderr,upper_ok,"
      "lower_freq,lower_rate_bound,lower_quadratic_bound,lower_stderr,lower_ok\n";
  for (const auto& r : rows)
    out += csv_line(r.binomial_n, r.p, r.mean, r.t, r.samples, r.seed, r.upper_frequency, r.upper_rate_bound,
                    r.upper_quadratic_bound, r.standard_error(r.upper_rate_bound), r.upper_within(3.0),
                    r.lower_frequency, r.lower_rate_bound, r.lower_quadratic_bound,
                    r.standard_error(r.lower_rate_bound), r.lower_within(3.0));
  return out;
}

std::string run_csv(const ExperimentSpec& spec) {
  const std::string& id = spec.id;
  if (id == "neighbors") return to_csv(id, exp_neighbors(spec));
  if (id == "common-neighbors") return to_csv(id, exp_common_neighbors(spec));
  if (id == "max-acyclic") return to_csv(id, exp_max_acyclic(spec));
  if (id == "subset-arcs") return to_csv(id, exp_subset_arcs(spec));
  if (id == "pair-contraction") return to_csv(id, exp_pair_contraction(spec));
  if (id == "threshold-sweep") return to_csv(exp_threshold_sweep(spec));
  if (id == "core-fraction") return to_csv(exp_core_fraction(spec));
  if (id == "tail-vs-bound") return to_csv(exp_tail_vs_bound(spec));
  throw std::invalid_argument("unknown experiment '" + id + "'");
}

}  // namespace dicore::experiments
