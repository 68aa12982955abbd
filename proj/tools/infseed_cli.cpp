#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "infseed/experiment.hpp"
#include "infseed/parallel.hpp"

namespace {

using namespace infseed;

struct Options {
  std::string dataset;
  bool directed = false;
  std::vector<std::string> methods;
  std::vector<std::size_t> k_values;
  std::uint32_t dtd = 2;
  std::string theta = "auto";
  double beta = 0.01;
  double p = 0.01;
  std::size_t reps = 10000;
  std::uint64_t seed = 1;
  std::string out = "out";
  std::size_t greedy_reps = 200;
  double katz_beta = 0.1;
  int threads = 0;
};

std::optional<std::size_t> parse_theta(const std::string& s) {
  if (s == "auto") return std::nullopt;
  if (s == "inf") return kUnboundedTheta;
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size())
    throw std::invalid_argument("bad --theta value: " + s);
  return v;
}

ExperimentConfig to_config(const Options& o) {
  ExperimentConfig c;
  c.dataset = o.dataset;
  c.directedness = o.directed ? Directedness::Directed : Directedness::Undirected;
  for (const auto& name : o.methods) {
    const auto m = parse_method(name);
    if (!m) throw std::invalid_argument("unknown method: " + name);
    c.methods.push_back(*m);
  }
  c.k_values = o.k_values;
  c.selection.distance_threshold = o.dtd;
  c.selection.theta = parse_theta(o.theta);
  c.selection.beta = o.beta;
  c.selection.pair_probability = o.p;
  c.ic = {.p = o.p, .replications = o.reps, .master_seed = o.seed};
  c.greedy_replications = o.greedy_reps;
  c.degree_discount.p = o.p;
  c.katz.beta = o.katz_beta;
  c.output_dir = o.out;
  c.master_seed = o.seed;
  return c;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--dataset", o.dataset, "edge list file")->required()->check(CLI::ExistingFile);
  cmd->add_flag("--directed", o.directed, "treat edges as arcs");
  cmd->add_option("--methods", o.methods, "comma-separated method names")
      ->delimiter(',')
      ->required();
  cmd->add_option("--dtd", o.dtd, "minimum hop distance between seeds")->capture_default_str();
  cmd->add_option("--theta", o.theta, "common-neighbor threshold: auto, inf or an integer")
      ->capture_default_str();
  cmd->add_option("--beta", o.beta, "influence-score threshold")->capture_default_str();
  cmd->add_option("--p", o.p, "propagation probability")->capture_default_str();
  cmd->add_option("--seed", o.seed, "master random seed")->capture_default_str();
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--katz-beta", o.katz_beta, "Katz attenuation")->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads, 0 for the default");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influential seed selection and spread evaluation"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "select seeds, simulate spread, write report.csv");
  add_common(run, o);
  run->add_option("--k", o.k_values, "comma-separated seed set sizes")->delimiter(',')->required();
  run->add_option("--reps", o.reps, "Monte Carlo replications")->capture_default_str();
  run->add_option("--greedy-reps", o.greedy_reps, "live-edge samples for greedy")
      ->capture_default_str();

  auto* overlap = app.add_subcommand("overlap", "pairwise common seeds and coverage");
  add_common(overlap, o);
  overlap->add_option("--k", o.k_values, "k grid (default 25,50,75,100)")->delimiter(',');

  auto* score = app.add_subcommand("score", "per-node scores of each measure as CSV");
  add_common(score, o);

  CLI11_PARSE(app, argc, argv);

  try {
    set_thread_count(o.threads);
    const ExperimentConfig config = to_config(o);
    if (run->parsed()) {
      const auto report = run_experiment(config);
      std::size_t failed = 0;
      for (const auto& row : report.rows) failed += !row.ok();
      std::cerr << report.rows.size() << " rows written to " << (config.output_dir / "report.csv").string();
      if (failed) std::cerr << " (" << failed << " failed, see run.log)";
      std::cerr << '\n';
    } else if (overlap->parsed()) {
      summarize_overlap(config);
      std::cerr << "wrote overlap.csv and coverage.csv to " << config.output_dir.string() << '\n';
    } else {
      const Graph g = load_edge_list(config.dataset, config.directedness);
      std::filesystem::create_directories(config.output_dir);
      for (Method m : config.methods) {
        const auto scores = compute_scores(g, m, config);
        const auto path = config.output_dir / ("scores_" + std::string(method_name(m)) + ".csv");
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        write_score_csv(out, g, scores);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "infseed: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
