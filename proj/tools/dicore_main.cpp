// dicore command-line tool. Talks to the library only through dicore.h.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict (NOT CORE,
// NOT FOUND, NOT CONTAINED), 2 unknown verdict, usage error or bad input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dicore/dicore.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string message;
};

struct DigraphDeleter {
  void operator()(dicore_digraph* d) const { dicore_digraph_free(d); }
};
using DigraphPtr = std::unique_ptr<dicore_digraph, DigraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { dicore_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

void check(dicore_status status) {
  if (status != DICORE_OK) throw Failure{dicore_last_error()};
}

DigraphPtr load(const std::string& path) {
  dicore_digraph* d = nullptr;
  check(dicore_digraph_read_file(path.c_str(), &d));
  return DigraphPtr(d);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{path + ": cannot open file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{path + ": cannot open file for writing"};
  out << text;
  if (!out.flush()) throw Failure{path + ": write failed"};
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void print_map(const std::vector<std::uint32_t>& image) {
  for (std::size_t i = 0; i < image.size(); ++i) std::cout << i + 1 << " -> " << image[i] + 1 << '\n';
}

// ---- subcommands ----------------------------------------------------------

struct SampleArgs {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_sample(const SampleArgs& a) {
  dicore_digraph* raw = nullptr;
  check(dicore_sample(a.n, a.p, a.seed, 0, &raw));
  DigraphPtr d(raw);
  char* text = nullptr;
  check(dicore_digraph_format(d.get(), &text));
  CString owned(text);
  write_output(a.out, text);
  return kExitOk;
}

struct CoreArgs {
  std::string in;
  std::uint64_t budget = DICORE_DEFAULT_BUDGET;
};

int run_is_core(const CoreArgs& a) {
  auto d = load(a.in);
  std::vector<std::uint32_t> witness(dicore_digraph_vertex_count(d.get()));
  dicore_core_verdict verdict{};
  check(dicore_is_core(d.get(), a.budget, &verdict, witness.data(), nullptr));
  switch (verdict) {
    case DICORE_CORE:
      std::cout << "CORE\n";
      return kExitOk;
    case DICORE_NOT_CORE:
      std::cout << "NOT CORE\n";
      print_map(witness);
      return kExitNegative;
    case DICORE_UNKNOWN:
      break;
  }
  std::cout << "UNKNOWN (budget)\n";
  return kExitError;
}

int report_search(dicore_search_outcome outcome, const std::vector<std::uint32_t>& image, const char* positive,
                  const char* negative) {
  switch (outcome) {
    case DICORE_FOUND:
      std::cout << positive << '\n';
      print_map(image);
      return kExitOk;
    case DICORE_NOT_FOUND:
      std::cout << negative << '\n';
      return kExitNegative;
    case DICORE_BUDGET_EXCEEDED:
      break;
  }
  std::cout << "UNKNOWN (budget)\n";
  return kExitError;
}

struct HomArgs {
  std::string from, to;
  std::uint64_t budget = DICORE_DEFAULT_BUDGET;
};

int run_find_hom(const HomArgs& a) {
  auto from = load(a.from);
  auto to = load(a.to);
  std::vector<std::uint32_t> image(dicore_digraph_vertex_count(from.get()));
  dicore_search_outcome outcome{};
  check(dicore_find_acyclic_hom(from.get(), to.get(), a.budget, &outcome, image.data(), nullptr));
  return report_search(outcome, image, "FOUND", "NOT FOUND");
}

struct ContainsArgs {
  std::string pattern, host;
  std::uint64_t budget = DICORE_DEFAULT_BUDGET;
};

int run_contains(const ContainsArgs& a) {
  auto pattern = load(a.pattern);
  auto host = load(a.host);
  std::vector<std::uint32_t> embedding(dicore_digraph_vertex_count(pattern.get()));
  dicore_search_outcome outcome{};
  check(dicore_contains(host.get(), pattern.get(), a.budget, &outcome, embedding.data(), nullptr));
  return report_search(outcome, embedding, "CONTAINED", "NOT CONTAINED");
}

struct DensityArgs {
  std::string in;
  std::string method = "exact";
};

int run_max_density(const DensityArgs& a) {
  auto d = load(a.in);
  const auto method = a.method == "brute" ? DICORE_DENSITY_BRUTE : DICORE_DENSITY_EXACT;
  std::vector<std::uint32_t> witness(dicore_digraph_vertex_count(d.get()));
  dicore_density r{};
  check(dicore_max_density(d.get(), method, &r, witness.data(), witness.size()));
  std::cout << "m = " << r.numerator << '/' << r.denominator << '\n';
  std::cout << "m ~ " << num(static_cast<double>(r.numerator) / static_cast<double>(r.denominator)) << '\n';
  std::cout << "witness:";
  for (std::size_t i = 0; i < r.witness_size; ++i) std::cout << ' ' << witness[i] + 1;
  std::cout << '\n';
  return kExitOk;
}

struct BoundArgs {
  std::optional<double> lambda, t, eps, mean;
};

int run_bound(const BoundArgs& a) {
  if (a.lambda && a.t) {
    dicore_tail_bound up{}, low{};
    check(dicore_chernoff_upper(*a.lambda, *a.t, &up));
    check(dicore_chernoff_lower(*a.lambda, *a.t, &low));
    std::cout << "upper_rate_bound = " << num(up.rate_bound) << '\n'
              << "upper_quadratic_bound = " << num(up.quadratic_bound) << '\n'
              << "lower_rate_bound = " << num(low.rate_bound) << '\n'
              << "lower_quadratic_bound = " << num(low.quadratic_bound) << '\n';
    return kExitOk;
  }
  if (a.eps && a.mean) {
    dicore_relative_bound r{};
    check(dicore_corollary_bound(*a.eps, *a.mean, &r));
    std::cout << "general = " << num(r.general) << '\n';
    if (r.has_simplified) std::cout << "simplified = " << num(r.simplified) << '\n';
    return kExitOk;
  }
  throw Failure{"bound: give either --lambda and --t, or --eps and --mean"};
}

struct ExperimentArgs {
  std::string id;
  std::string config;
  std::vector<std::size_t> n;
  std::vector<double> p;
  std::vector<double> scales;
  std::optional<std::size_t> trials, k, samples, binomial_n, t_points;
  std::optional<std::uint64_t> seed, budget;
  std::optional<unsigned> workers;
  std::optional<double> t_max;
  std::string pattern;
  std::string source;
  std::string out;
  bool list = false;
};

int run_experiment(const ExperimentArgs& a) {
  if (a.list) {
    for (std::size_t i = 0; i < dicore_experiment_count(); ++i) std::cout << dicore_experiment_id(i) << '\n';
    return kExitOk;
  }
  if (a.id.empty()) throw Failure{"experiment: missing experiment id (see --list)"};

  nlohmann::json cfg = nlohmann::json::object();
  if (!a.config.empty()) {
    try {
      cfg = nlohmann::json::parse(read_text(a.config));
    } catch (const nlohmann::json::exception& e) {
      throw Failure{a.config + ": " + e.what()};
    }
    if (!cfg.is_object()) throw Failure{a.config + ": config must be a JSON object"};
  }
  if (!a.n.empty()) cfg["n"] = a.n;
  if (!a.p.empty()) cfg["p"] = a.p;
  if (!a.scales.empty()) cfg["scales"] = a.scales;
  if (a.trials) cfg["trials"] = *a.trials;
  if (a.seed) cfg["seed"] = *a.seed;
  if (a.k) cfg["k"] = *a.k;
  if (a.samples) cfg["samples"] = *a.samples;
  if (a.budget) cfg["budget"] = *a.budget;
  if (a.workers) cfg["workers"] = *a.workers;
  if (a.binomial_n) cfg["binomial_n"] = *a.binomial_n;
  if (a.t_points) cfg["t_points"] = *a.t_points;
  if (a.t_max) cfg["t_max"] = *a.t_max;
  if (!a.source.empty()) cfg["source"] = a.source;
  if (!a.pattern.empty()) cfg["pattern"] = read_text(a.pattern);

  char* csv = nullptr;
  check(dicore_experiment_run(a.id.c_str(), cfg.dump().c_str(), &csv));
  CString owned(csv);
  write_output(a.out, csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random digraphs, acyclic homomorphisms and cores"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dicore_version());

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a digraph from D(n, p)");
  sample_cmd->add_option("--n", sample.n, "Vertex count")->required();
  sample_cmd->add_option("--p", sample.p, "Arc probability")->required()->check(CLI::Range(0.0, 1.0));
  sample_cmd->add_option("--seed", sample.seed, "Seed")->required();
  sample_cmd->add_option("--out", sample.out, "Output file (default stdout)");

  CoreArgs core;
  auto* core_cmd = app.add_subcommand("is-core", "Decide whether a digraph is a core");
  core_cmd->add_option("--in", core.in, "Digraph file")->required();
  core_cmd->add_option("--budget", core.budget, "Search node budget");

  HomArgs hom;
  auto* hom_cmd = app.add_subcommand("find-hom", "Search for an acyclic homomorphism");
  hom_cmd->add_option("--from", hom.from, "Source digraph file")->required();
  hom_cmd->add_option("--to", hom.to, "Target digraph file")->required();
  hom_cmd->add_option("--budget", hom.budget, "Search node budget");

  ContainsArgs contains;
  auto* contains_cmd = app.add_subcommand("contains", "Search for a copy of a pattern in a host digraph");
  contains_cmd->add_option("--pattern", contains.pattern, "Pattern digraph file")->required();
  contains_cmd->add_option("--host", contains.host, "Host digraph file")->required();
  contains_cmd->add_option("--budget", contains.budget, "Search node budget");

  DensityArgs density;
  auto* density_cmd = app.add_subcommand("max-density", "Maximum density m(D) with a witness set");
  density_cmd->add_option("--in", density.in, "Digraph file")->required();
  density_cmd->add_option("--method", density.method, "exact or brute")
      ->check(CLI::IsMember({"exact", "brute"}));

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate Chernoff tail bounds");
  auto* lambda_opt = bound_cmd->add_option("--lambda", bound.lambda, "Mean of the binomial");
  auto* t_opt = bound_cmd->add_option("--t", bound.t, "Deviation from the mean");
  auto* eps_opt = bound_cmd->add_option("--eps", bound.eps, "Relative deviation");
  auto* mean_opt = bound_cmd->add_option("--mean", bound.mean, "Mean of the binomial");
  lambda_opt->needs(t_opt)->excludes(eps_opt)->excludes(mean_opt);
  t_opt->needs(lambda_opt)->excludes(eps_opt)->excludes(mean_opt);
  eps_opt->needs(mean_opt);
  mean_opt->needs(eps_opt);

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded Monte Carlo experiment and print CSV");
  exp_cmd->add_option("id", exp.id, "Experiment id");
  exp_cmd->add_flag("--list", exp.list, "List experiment ids");
  exp_cmd->add_option("--config", exp.config, "JSON config file; flags override it");
  exp_cmd->add_option("--n", exp.n, "Vertex counts")->delimiter(',');
  exp_cmd->add_option("--p", exp.p, "Arc probabilities")->delimiter(',');
  exp_cmd->add_option("--scales", exp.scales, "Multiples of the threshold (threshold-sweep)")->delimiter(',');
  exp_cmd->add_option("--trials", exp.trials, "Trials per cell");
  exp_cmd->add_option("--seed", exp.seed, "Master seed");
  exp_cmd->add_option("--k", exp.k, "Subset size or pair count");
  exp_cmd->add_option("--samples", exp.samples, "Pairs per trial or tail draws");
  exp_cmd->add_option("--budget", exp.budget, "Search node budget");
  exp_cmd->add_option("--workers", exp.workers, "Worker threads (default: available parallelism)");
  exp_cmd->add_option("--binomial-n", exp.binomial_n, "Binomial trial count (tail-vs-bound)");
  exp_cmd->add_option("--t-points", exp.t_points, "Points on the t grid (tail-vs-bound)");
  exp_cmd->add_option("--t-max", exp.t_max, "Largest t (tail-vs-bound)");
  exp_cmd->add_option("--source", exp.source, "binomial or neighbors (tail-vs-bound)");
  exp_cmd->add_option("--pattern", exp.pattern, "Pattern digraph file (threshold-sweep)");
  exp_cmd->add_option("--out", exp.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sample_cmd) return run_sample(sample);
    if (*core_cmd) return run_is_core(core);
    if (*hom_cmd) return run_find_hom(hom);
    if (*contains_cmd) return run_contains(contains);
    if (*density_cmd) return run_max_density(density);
    if (*bound_cmd) return run_bound(bound);
    if (*exp_cmd) return run_experiment(exp);
  } catch (const Failure& f) {
    std::cerr << "dicore: " << f.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "dicore: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
