#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infseed/graph.hpp"
#include "infseed/seed_set.hpp"

namespace infseed {

struct OverlapReport {
  std::size_t k = 0;
  std::size_t common = 0;
  /// 100 * common / k.
  double com_percent = 0.0;
};

struct CoverageReport {
  /// Sum over seeds of |N1(s) ∪ N2(s)|.
  std::size_t total = 0;
  /// Size of the union of those neighborhoods.
  std::size_t unique = 0;
  double cov_percent = 0.0;
  /// total was 0 (every seed isolated); cov_percent is reported as 0.
  bool degenerate = false;
};

/// Percentage of shared seeds between the top-k prefixes of two seed lists.
OverlapReport com_overlap(std::span<const NodeId> s1, std::span<const NodeId> s2, std::size_t k);
OverlapReport com_overlap(const SeedSet& s1, const SeedSet& s2, std::size_t k);

/// 100 - 100 * unique / total. Requires unique <= total and total > 0.
double cov_percent(std::size_t total, std::size_t unique);

/// Redundancy of the first- and second-order neighborhoods of the first k
/// seeds (undirected view). A seed is not part of its own neighborhood but
/// may appear in another seed's.
CoverageReport cn12_coverage(const Graph& g, std::span<const NodeId> seeds, std::size_t k);
CoverageReport cn12_coverage(const Graph& g, const SeedSet& seeds, std::size_t k);

/// 100 * |union of N1(s) ∪ N2(s)| / node_count.
double unique_influenced_percent(const Graph& g, std::span<const NodeId> seeds);

/// Sample Pearson correlation coefficient.
double pearson(std::span<const double> x, std::span<const double> y);

/// Per-node surrogate scores for a selector: k - rank for the seed at
/// 0-based selection rank, 0 for non-seeds.
std::vector<double> rank_surrogate_scores(const SeedSet& seeds, NodeId node_count);

}  // namespace infseed
