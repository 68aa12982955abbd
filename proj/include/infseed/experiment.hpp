#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "infseed/centrality.hpp"
#include "infseed/diffusion.hpp"
#include "infseed/graph.hpp"
#include "infseed/metrics.hpp"
#include "infseed/seed_set.hpp"

namespace infseed {

/// Everything one campaign needs. `selection.k` is ignored; the runner
/// iterates over `k_values`.
struct ExperimentConfig {
  std::filesystem::path dataset;
  Directedness directedness = Directedness::Undirected;
  std::vector<Method> methods;
  std::vector<std::size_t> k_values;
  SelectionConfig selection;
  ICParams ic;
  std::size_t greedy_replications = 200;
  DegreeDiscountParams degree_discount;
  KatzParams katz;
  PageRankParams pagerank;
  std::filesystem::path output_dir;
  /// Drives every random choice (IC streams, random seeds, greedy samples).
  std::uint64_t master_seed = 1;

  void validate() const;
};

/// Default k grid for overlap summaries.
inline const std::vector<std::size_t> kOverlapGrid{25, 50, 75, 100};

/// Scores for a scoring measure (degree through k-shell). Throws
/// DomainError for selector-only methods.
ScoreVector compute_scores(const Graph& g, Method method, const ExperimentConfig& config);

/// `original_id,score,rank` with rank 1 for the top node, in ranking order.
void write_score_csv(std::ostream& out, const Graph& g, const ScoreVector& scores);

/// Seed set of size k (or shorter, if the selector exhausts its candidates).
SeedSet select_seeds(const Graph& g, Method method, std::size_t k, const ExperimentConfig& config);

struct ReportRow {
  std::string dataset;
  Method method = Method::Degree;
  std::size_t k = 0;
  std::size_t seeds_found = 0;
  bool exhausted = false;
  std::optional<SpreadEstimate> spread;
  /// Wall time of seed identification only, milliseconds.
  double selection_ms = 0.0;
  /// Wall time of the Monte Carlo spread estimate, milliseconds.
  double simulation_ms = 0.0;
  std::optional<double> cov_percent;
  std::optional<double> unique_influenced_percent;
  /// COM against each method of the report, aligned with
  /// ExperimentReport::methods. Empty when either set is shorter than k.
  std::vector<std::optional<double>> com;
  /// Non-empty when this method failed; other fields are then unset.
  std::string error;

  bool ok() const { return error.empty(); }
};

struct ExperimentReport {
  std::string dataset;
  std::vector<Method> methods;
  std::vector<ReportRow> rows;
  LoadSummary load;

  /// report.csv: deterministic columns only (no wall times).
  void write_csv(std::ostream& out) const;
  /// timing.csv: per-row selection and simulation times.
  void write_timing_csv(std::ostream& out) const;
};

/// Runs every (method, k) on an already loaded graph. Performs no I/O.
ExperimentReport run_experiment(const Graph& g, const ExperimentConfig& config,
                                const std::string& dataset_name);

/// Loads config.dataset, runs the campaign and writes report.csv,
/// timing.csv, run.log and seeds/<method>_k<k>.txt under output_dir.
ExperimentReport run_experiment(const ExperimentConfig& config);

struct OverlapSummary {
  struct ComRow {
    Method a;
    Method b;
    std::size_t k;
    std::optional<double> com_percent;
  };
  struct CoverageRow {
    Method method;
    std::size_t k;
    std::optional<CoverageReport> coverage;
  };

  std::string dataset;
  std::vector<ComRow> com;
  std::vector<CoverageRow> coverage;

  void write_overlap_csv(std::ostream& out) const;
  void write_coverage_csv(std::ostream& out) const;
};

/// Pairwise COM matrix and per-method coverage over the k grid
/// (kOverlapGrid when config.k_values is empty). Needs at least two methods.
OverlapSummary summarize_overlap(const Graph& g, const ExperimentConfig& config,
                                 const std::string& dataset_name);
/// Loads the dataset and writes overlap.csv and coverage.csv.
OverlapSummary summarize_overlap(const ExperimentConfig& config);

}  // namespace infseed
