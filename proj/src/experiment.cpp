#include "infseed/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "infseed/error.hpp"
#include "infseed/seed_select.hpp"

namespace infseed {
namespace {

constexpr const char* kReportSchema = "# infseed report v1";
constexpr const char* kTimingSchema = "# infseed timing v1";
constexpr const char* kOverlapSchema = "# infseed overlap v1";
constexpr const char* kCoverageSchema = "# infseed coverage v1";

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string fixed(double value, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string fixed(const std::optional<double>& value, int digits = 6) {
  return value ? fixed(*value, digits) : std::string{};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

bool is_scoring(Method m) {
  switch (m) {
    case Method::Degree:
    case Method::Katz:
    case Method::Closeness:
    case Method::Betweenness:
    case Method::Eigenvector:
    case Method::PageRank:
    case Method::LeaderRank:
    case Method::KShell:
      return true;
    default:
      return false;
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (methods.empty()) throw DomainError("experiment needs at least one method");
  if (k_values.empty()) throw DomainError("experiment needs at least one k value");
  if (!std::is_sorted(k_values.begin(), k_values.end()))
    throw DomainError("k values must be sorted ascending");
  if (k_values.front() < 1) throw DomainError("k values must be positive");
  ic.validate();
  if (greedy_replications < 1) throw DomainError("greedy replications must be positive");
  SelectionConfig probe = selection;
  probe.k = 1;
  probe.validate();
}

ScoreVector compute_scores(const Graph& g, Method method, const ExperimentConfig& config) {
  switch (method) {
    case Method::Degree:
      return degree_centrality(g);
    case Method::Katz:
      return katz_centrality(g, config.katz);
    case Method::Closeness:
      return closeness_centrality(g);
    case Method::Betweenness:
      return betweenness_centrality(g);
    case Method::Eigenvector:
      return eigenvector_centrality(g);
    case Method::PageRank:
      return pagerank(g, config.pagerank);
    case Method::LeaderRank:
      return leaderrank(g);
    case Method::KShell:
      return kshell_decomposition(g);
    default:
      throw DomainError(std::string(method_name(method)) + " is a selector, not a score");
  }
}

void write_score_csv(std::ostream& out, const Graph& g, const ScoreVector& scores) {
  out << "original_id,score,rank\n";
  char buf[64];
  for (std::size_t r = 0; r < scores.ranking.size(); ++r) {
    const NodeId v = scores.ranking[r];
    std::snprintf(buf, sizeof buf, "%.17g", scores.scores[v]);
    out << g.original_id(v) << ',' << buf << ',' << r + 1 << '\n';
  }
}

SeedSet select_seeds(const Graph& g, Method method, std::size_t k, const ExperimentConfig& config) {
  if (is_scoring(method)) return compute_scores(g, method, config).top(k);
  SelectionConfig selection = config.selection;
  selection.k = k;
  switch (method) {
    case Method::DegreeDiscount:
      return degreediscount_select(g, k, config.degree_discount);
    case Method::Greedy: {
      ICParams ic = config.ic;
      ic.master_seed = mix64(config.master_seed ^ 0x67726565647950ULL);
      return greedy_select(g, k, ic, config.greedy_replications);
    }
    case Method::DegreeDistance:
      return degreedistance_select(g, selection);
    case Method::DegreeDistance2:
      return degreedistance2_select(g, k);
    case Method::Fidd:
      return fidd_select(g, selection);
    case Method::Sidd:
      return sidd_select(g, selection);
    case Method::Random:
      return random_select(g, k, mix64(config.master_seed));
    default:
      throw DomainError("unsupported method");
  }
}

ExperimentReport run_experiment(const Graph& g, const ExperimentConfig& config,
                                const std::string& dataset_name) {
  config.validate();
  ExperimentReport report;
  report.dataset = dataset_name;
  report.methods = config.methods;

  ICParams ic = config.ic;
  ic.master_seed = config.master_seed;

  // seeds[method index][k index]
  std::vector<std::vector<std::optional<SeedSet>>> seeds(
      config.methods.size(), std::vector<std::optional<SeedSet>>(config.k_values.size()));

  for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
    for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
      ReportRow row;
      row.dataset = dataset_name;
      row.method = config.methods[mi];
      row.k = config.k_values[ki];
      try {
        const auto t0 = Clock::now();
        SeedSet set = select_seeds(g, row.method, row.k, config);
        row.selection_ms = elapsed_ms(t0);
        row.seeds_found = set.seeds.size();
        row.exhausted = set.exhausted;

        const auto t1 = Clock::now();
        row.spread = estimate_spread(g, set.seeds, ic);
        row.simulation_ms = elapsed_ms(t1);

        if (!set.seeds.empty()) {
          const auto cov = cn12_coverage(g, set, set.seeds.size());
          row.cov_percent = cov.cov_percent;
          row.unique_influenced_percent = unique_influenced_percent(g, set.seeds);
        }
        seeds[mi][ki] = std::move(set);
      } catch (const std::exception& e) {
        row = ReportRow{};
        row.dataset = dataset_name;
        row.method = config.methods[mi];
        row.k = config.k_values[ki];
        row.error = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }

  for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
    for (std::size_t ki = 0; ki < config.k_values.size(); ++ki) {
      auto& row = report.rows[mi * config.k_values.size() + ki];
      row.com.assign(config.methods.size(), std::nullopt);
      if (!row.ok()) continue;
      const auto& mine = *seeds[mi][ki];
      for (std::size_t other = 0; other < config.methods.size(); ++other) {
        const auto& theirs = seeds[other][ki];
        if (!theirs || mine.seeds.size() < row.k || theirs->seeds.size() < row.k) continue;
        row.com[other] = com_overlap(mine, *theirs, row.k).com_percent;
      }
    }
  }
  return report;
}

void ExperimentReport::write_csv(std::ostream& out) const {
  out << kReportSchema << '\n';
  out << "dataset,method,k,status,seeds,exhausted,spread_mean,spread_stddev,spread_reps,"
         "cov_percent,unique_influenced_percent";
  for (Method m : methods) out << ",com_" << method_name(m);
  out << '\n';
  for (const auto& row : rows) {
    out << csv_field(row.dataset) << ',' << method_name(row.method) << ',' << row.k << ',';
    if (!row.ok()) {
      out << csv_field("error: " + row.error) << ",,,,,,,";
      for (std::size_t i = 0; i < methods.size(); ++i) out << ',';
      out << '\n';
      continue;
    }
    out << (row.exhausted ? "partial" : "ok") << ',' << row.seeds_found << ','
        << (row.exhausted ? 1 : 0) << ',';
    if (row.spread)
      out << fixed(row.spread->mean) << ',' << fixed(row.spread->stddev) << ','
          << row.spread->replications;
    else
      out << ",,";
    out << ',' << fixed(row.cov_percent, 4) << ',' << fixed(row.unique_influenced_percent, 4);
    for (const auto& c : row.com) out << ',' << fixed(c, 2);
    out << '\n';
  }
}

void ExperimentReport::write_timing_csv(std::ostream& out) const {
  out << kTimingSchema << '\n';
  out << "dataset,method,k,selection_ms,simulation_ms\n";
  for (const auto& row : rows) {
    out << csv_field(row.dataset) << ',' << method_name(row.method) << ',' << row.k << ',';
    if (row.ok())
      out << fixed(row.selection_ms, 3) << ',' << fixed(row.simulation_ms, 3);
    else
      out << ',';
    out << '\n';
  }
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  LoadSummary load;
  const Graph g = load_edge_list(config.dataset, config.directedness, &load);
  const std::string name = config.dataset.stem().string();
  ExperimentReport report = run_experiment(g, config, name);
  report.load = load;

  std::filesystem::create_directories(config.output_dir / "seeds");
  {
    auto out = open_output(config.output_dir / "report.csv");
    report.write_csv(out);
  }
  {
    auto out = open_output(config.output_dir / "timing.csv");
    report.write_timing_csv(out);
  }
  for (Method m : config.methods) {
    for (std::size_t k : config.k_values) {
      const auto& row = *std::find_if(report.rows.begin(), report.rows.end(),
                                      [&](const ReportRow& r) { return r.method == m && r.k == k; });
      if (!row.ok()) continue;
      // Re-selection is deterministic; this keeps seed files out of the timed path.
      const SeedSet set = select_seeds(g, m, k, config);
      auto out = open_output(config.output_dir / "seeds" /
                             (std::string(method_name(m)) + "_k" + std::to_string(k) + ".txt"));
      write_seed_file(out, g, set);
    }
  }
  auto log = open_output(config.output_dir / "run.log");
  log << "dataset " << config.dataset.string() << '\n'
      << "directed " << (g.directed() ? "yes" : "no") << '\n'
      << "nodes " << g.node_count() << '\n'
      << "edges " << g.edge_count() << '\n'
      << "lines_read " << load.lines_read << '\n'
      << "edges_read " << load.edges_read << '\n'
      << "self_loops_dropped " << load.self_loops_dropped << '\n'
      << "duplicates_dropped " << load.duplicates_dropped << '\n'
      << "theta " << resolve_theta(g, config.selection) << '\n';
  for (const auto& row : report.rows) {
    if (!row.ok())
      log << "error " << method_name(row.method) << " k=" << row.k << ": " << row.error << '\n';
    else if (row.exhausted)
      log << "warning " << method_name(row.method) << " k=" << row.k << ": only "
          << row.seeds_found << " seeds available\n";
  }
  return report;
}

OverlapSummary summarize_overlap(const Graph& g, const ExperimentConfig& config,
                                 const std::string& dataset_name) {
  if (config.methods.size() < 2) throw DomainError("overlap summary needs at least two methods");
  const auto& grid = config.k_values.empty() ? kOverlapGrid : config.k_values;
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw DomainError("k values must be sorted ascending");
  const std::size_t k_max = std::min<std::size_t>(grid.back(), g.node_count());

  // Every selector here is prefix-stable: the k-seed answer is the first k
  // entries of the k_max answer.
  std::vector<std::optional<SeedSet>> seeds(config.methods.size());
  for (std::size_t i = 0; i < config.methods.size(); ++i) {
    try {
      seeds[i] = select_seeds(g, config.methods[i], k_max, config);
    } catch (const std::exception&) {
      seeds[i] = std::nullopt;
    }
  }

  OverlapSummary summary;
  summary.dataset = dataset_name;
  for (std::size_t k : grid) {
    for (std::size_t a = 0; a < config.methods.size(); ++a) {
      for (std::size_t b = 0; b < config.methods.size(); ++b) {
        OverlapSummary::ComRow row{config.methods[a], config.methods[b], k, std::nullopt};
        if (seeds[a] && seeds[b] && seeds[a]->seeds.size() >= k && seeds[b]->seeds.size() >= k)
          row.com_percent = com_overlap(*seeds[a], *seeds[b], k).com_percent;
        summary.com.push_back(row);
      }
    }
    for (std::size_t a = 0; a < config.methods.size(); ++a) {
      OverlapSummary::CoverageRow row{config.methods[a], k, std::nullopt};
      if (seeds[a] && seeds[a]->seeds.size() >= k) row.coverage = cn12_coverage(g, *seeds[a], k);
      summary.coverage.push_back(row);
    }
  }
  return summary;
}

void OverlapSummary::write_overlap_csv(std::ostream& out) const {
  out << kOverlapSchema << '\n' << "dataset,method_a,method_b,k,com_percent\n";
  for (const auto& row : com)
    out << csv_field(dataset) << ',' << method_name(row.a) << ',' << method_name(row.b) << ','
        << row.k << ',' << fixed(row.com_percent, 2) << '\n';
}

void OverlapSummary::write_coverage_csv(std::ostream& out) const {
  out << kCoverageSchema << '\n' << "dataset,method,k,total,unique,cov_percent,degenerate\n";
  for (const auto& row : coverage) {
    out << csv_field(dataset) << ',' << method_name(row.method) << ',' << row.k << ',';
    if (row.coverage)
      out << row.coverage->total << ',' << row.coverage->unique << ','
          << fixed(row.coverage->cov_percent, 2) << ',' << (row.coverage->degenerate ? 1 : 0);
    else
      out << ",,,";
    out << '\n';
  }
}

OverlapSummary summarize_overlap(const ExperimentConfig& config) {
  const Graph g = load_edge_list(config.dataset, config.directedness);
  auto summary = summarize_overlap(g, config, config.dataset.stem().string());
  std::filesystem::create_directories(config.output_dir);
  {
    auto out = open_output(config.output_dir / "overlap.csv");
    summary.write_overlap_csv(out);
  }
  auto out = open_output(config.output_dir / "coverage.csv");
  summary.write_coverage_csv(out);
  return summary;
}

}  // namespace infseed
