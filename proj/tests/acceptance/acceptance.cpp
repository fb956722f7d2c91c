// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dicore/density.hpp"
#include "dicore/experiments.hpp"
#include "dicore/homomorphism.hpp"
#include "dicore/bounds.hpp"
#include "dicore/random_model.hpp"

namespace ex = dicore::experiments;
using dicore::CoreStatus;
using dicore::Digraph;
using dicore::Rational;
using dicore::VertexMap;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int failures = 0;

void criterion(int number, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    o.pass = false;
    o.detail += fmt("; over the %.0f s limit", limit_seconds);
  }
  if (!o.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", number, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

// Core by exhaustion: no non-injective self-map passes verify_acyclic_hom.
bool enumerated_core(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<dicore::Vertex> map(n, 0);
  while (true) {
    const VertexMap rho(n, n, map);
    if (!rho.is_injective() && dicore::verify_acyclic_hom(d, d, rho)) return false;
    std::size_t i = 0;
    while (i < n && ++map[i] == n) map[i++] = 0;
    if (i == n) return true;
  }
}

Outcome core_oracle() {
  std::size_t checked = 0, disagreements = 0;
  for (std::size_t n : {3, 4})
    dicore::for_each_digraph(n, [&](const Digraph& d) {
      ++checked;
      const auto v = dicore::is_core(d);
      const bool expected = enumerated_core(d);
      bool agree = v.status != CoreStatus::Unknown && (v.status == CoreStatus::Core) == expected;
      if (v.status == CoreStatus::NotCore)
        agree = agree && !v.witness->is_injective() && dicore::verify_acyclic_hom(d, d, *v.witness);
      if (!agree) ++disagreements;
    });
  return {disagreements == 0 && checked == 64 + 4096,
          std::to_string(checked) + " digraphs, " + std::to_string(disagreements) + " disagreements"};
}

Outcome density_oracle() {
  std::size_t checked = 0, disagreements = 0;
  auto compare = [&](const Digraph& d) {
    ++checked;
    const auto exact = dicore::max_density_exact(d);
    const auto brute = dicore::max_density_bruteforce(d);
    if (exact.value() != brute.value() || d.induced_arc_count(exact.witness) != exact.arcs ||
        exact.witness.size() != exact.vertices)
      ++disagreements;
  };
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Digraph& d : dicore::enumerate_all(n)) compare(d);
  const double ps[] = {0.2, 0.5, 0.8};
  for (std::uint64_t i = 0; i < 500; ++i) compare(dicore::sample(5 + i % 8, ps[(i / 8) % 3], {20240101, i}));
  return {disagreements == 0, std::to_string(checked) + " digraphs, " + std::to_string(disagreements) + " disagreements"};
}

Outcome named_cases() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  expect(dicore::is_core(Digraph(1)).status == CoreStatus::Core, "single vertex core");
  const auto arc = dicore::is_core(Digraph(2, {{0, 1}}));
  expect(arc.status == CoreStatus::NotCore && arc.witness->image()[0] == arc.witness->image()[1],
         "single arc not core with constant witness");
  expect(dicore::is_core(dicore::directed_cycle(2)).status == CoreStatus::Core, "2-cycle core");
  expect(dicore::is_core(dicore::directed_cycle(3)).status == CoreStatus::Core, "3-cycle core");
  expect(dicore::max_density_exact(dicore::directed_cycle(2)).value() == Rational(1, 1), "m(2-cycle) = 1");
  expect(dicore::max_density_bruteforce(dicore::complete_digraph(3)).value() == Rational(2, 1), "m(K3) = 2");
  for (std::size_t k = 2; k <= 8; ++k) {
    const Digraph c = dicore::directed_cycle(k);
    expect(dicore::max_density_exact(c).value() == Rational(1, 1) &&
               dicore::max_density_bruteforce(c).value() == Rational(1, 1),
           "m(" + std::to_string(k) + "-cycle) = 1");
  }
  std::string detail = failed.empty() ? "all 13 cases hold" : "failed:";
  for (const auto& f : failed) detail += " " + f + ";";
  return {failed.empty(), detail};
}

Outcome expectation_formulas() {
  struct Case {
    const char* id;
    double tolerance;
    double reference;
    std::function<std::vector<ex::StatRow>(const ex::ExperimentSpec&)> run;
  };
  const std::vector<Case> cases{
      {"neighbors", 0.01, 1999 * (2 * 0.3 - 0.09), ex::exp_neighbors},
      {"common-neighbors", 0.02, 1998 * 0.09 * 1.7 * 1.7, ex::exp_common_neighbors},
      {"subset-arcs", 0.02, 2 * 0.3 * 4950, ex::exp_subset_arcs},
      {"pair-contraction", 0.02, 2 * 4950 * (1 - std::pow(0.8, 4)), ex::exp_pair_contraction},
  };
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto row = c.run(ex::default_spec(c.id)).front();
    const double mean = row.summary.stats.mean();
    const double dev = (mean - c.reference) / c.reference;
    const bool ok = std::fabs(dev) <= c.tolerance && std::fabs(row.summary.reference - c.reference) < 1e-9 * c.reference;
    pass = pass && ok;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s%s mean %.3f vs %.3f (%+.4f%%, tol %.0f%%)", detail.empty() ? "" : "; ", c.id,
                  mean, c.reference, 100 * dev, 100 * c.tolerance);
    detail += buf;
  }
  return {pass, detail};
}

Outcome chernoff_dominance() {
  const auto rows = ex::exp_tail_vs_bound(ex::default_spec("tail-vs-bound"));
  bool pass = rows.size() == 20 && rows.front().samples == 1000000 && rows.front().binomial_n == 1000;
  double worst = -1e300;  // largest (freq - bound) / se
  for (const auto& r : rows) {
    for (auto [freq, bound] : {std::pair{r.upper_frequency, r.upper_rate_bound}, {r.lower_frequency, r.lower_rate_bound}}) {
      const double se = r.standard_error(bound);
      const double z = se > 0 ? (freq - bound) / se : (freq > bound ? 1e300 : -1e300);
      worst = std::max(worst, z);
      if (freq > bound + 3 * se) pass = false;
    }
  }
  std::size_t grid = 0, violations = 0;
  for (double lambda : {1.0, 10.0, 100.0, 1000.0})
    for (int i = 1; i <= 150; ++i) {
      const double t = 0.01 * i * lambda;
      const auto up = dicore::chernoff_upper(lambda, t);
      const auto low = dicore::chernoff_lower(lambda, t);
      grid += 2;
      if (up.rate_bound > up.quadratic_bound + 1e-12) ++violations;
      if (low.rate_bound > low.quadratic_bound + 1e-12) ++violations;
    }
  pass = pass && violations == 0;
  return {pass, fmt("20-point t-grid, worst excess %.2f SE (limit 3)", worst) + "; chain rate <= quadratic on " +
                    std::to_string(grid) + " grid points, " + std::to_string(violations) + " violations"};
}

Outcome threshold_crossing() {
  auto spec = ex::default_spec("threshold-sweep");
  const auto rows = ex::exp_threshold_sweep(spec);
  const ex::ThresholdRow* low = nullptr;
  const ex::ThresholdRow* high = nullptr;
  for (const auto& r : rows) {
    if (r.scale == 0.1) low = &r;
    if (r.scale == 10) high = &r;
  }
  if (low == nullptr || high == nullptr) return {false, "grid lacks scales 0.1 and 10"};
  auto copies = [](double p) { return 200.0 * 199.0 / 2.0 * p * p; };
  // First moment: P(contain) <= E[copies].
  const double se_low = std::sqrt(copies(low->p) * (1 - copies(low->p)) / 1000.0);
  const bool consistent = low->frequency() <= copies(low->p) + 3 * se_low + 1e-12;
  const bool pass = low->frequency() < 0.05 && high->frequency() > 0.99 && low->trials == 1000 && low->n == 200 &&
                    consistent && low->unknown == 0 && high->unknown == 0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "n=200, 1000 trials: freq %.3f at p=0.1/n (first moment %.5f), %.3f at p=10/n (first moment %.2f)",
                low->frequency(), copies(low->p), high->frequency(), copies(high->p));
  return {pass, buf};
}

Outcome core_trend() {
  const auto spec = ex::default_spec("core-fraction");
  const auto rows = ex::exp_core_fraction(spec);
  bool pass = rows.size() == 4;
  std::string curve;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    pass = pass && r.trials >= 200 && r.unknown_frequency() < 0.05 && r.p == 0.5;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sn=%zu %.3f (unknown %.3f)", i ? ", " : "", r.n, r.core_frequency(),
                  r.unknown_frequency());
    curve += buf;
    if (i > 0) {
      const auto& prev = rows[i - 1];
      auto se = [](const ex::CoreRow& row) {
        const double f = row.core_frequency();
        return std::sqrt(f * (1 - f) / static_cast<double>(row.trials));
      };
      const double slack = 2 * std::sqrt(se(prev) * se(prev) + se(r) * se(r));
      if (r.core_frequency() < prev.core_frequency() - slack) pass = false;
    }
  }
  return {pass, "seed " + std::to_string(spec.seed) + ", p=0.5, " + std::to_string(spec.trials) + " trials: " + curve};
}

Outcome reproducibility() {
  std::size_t identical = 0;
  std::string differing;
  for (const auto& id : ex::experiment_ids()) {
    auto spec = ex::default_spec(id);
    spec.workers = 1;
    const std::string one = ex::run_csv(spec);
    spec.workers = 8;
    const std::string eight = ex::run_csv(spec);
    if (one == eight)
      ++identical;
    else
      differing += " " + id;
  }
  const std::size_t total = ex::experiment_ids().size();
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                  " experiments byte-identical for 1 vs 8 workers" +
                                  (differing.empty() ? "" : ";  differ:" + differing)};
}

}  // namespace

int main() {
  criterion(1, "core oracle equivalence", 300, core_oracle);
  criterion(2, "density oracle equivalence", 120, density_oracle);
  criterion(3, "named small cases", 60, named_cases);
  criterion(4, "expectation formulas", 600, expectation_formulas);
  criterion(5, "Chernoff dominance", 120, chernoff_dominance);
  criterion(6, "threshold crossing", 120, threshold_crossing);
  criterion(7, "core-fraction trend", 1800, core_trend);
  criterion(8, "reproducibility across worker counts", 1800, reproducibility);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
