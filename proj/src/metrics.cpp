#include "infseed/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "infseed/error.hpp"
#include "infseed/neighborhood.hpp"

namespace infseed {
namespace {

/// N1(s) ∪ N2(s) in the undirected view.
void for_each_cn12(const Graph& g, BfsWorkspace& bfs, NodeId s, auto&& visit) {
  bfs.run(g, s, View::Undirected, 2, [&](NodeId w, std::uint32_t d) {
    if (d > 0) visit(w);
    return true;
  });
}

}  // namespace

OverlapReport com_overlap(std::span<const NodeId> s1, std::span<const NodeId> s2, std::size_t k) {
  if (k == 0) throw DomainError("overlap needs k >= 1");
  if (s1.size() < k || s2.size() < k)
    throw DomainError("seed set shorter than k = " + std::to_string(k));
  std::vector<NodeId> a(s1.begin(), s1.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<NodeId> b(s2.begin(), s2.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<NodeId> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  OverlapReport r;
  r.k = k;
  r.common = shared.size();
  r.com_percent = static_cast<double>(r.common) / static_cast<double>(k) * 100.0;
  return r;
}

OverlapReport com_overlap(const SeedSet& s1, const SeedSet& s2, std::size_t k) {
  return com_overlap(s1.seeds, s2.seeds, k);
}

double cov_percent(std::size_t total, std::size_t unique) {
  if (total == 0) throw DomainError("coverage rate undefined for an empty neighborhood");
  if (unique > total) throw DomainError("unique count exceeds total");
  return 100.0 - (static_cast<double>(unique) / static_cast<double>(total)) * 100.0;
}

CoverageReport cn12_coverage(const Graph& g, std::span<const NodeId> seeds, std::size_t k) {
  if (seeds.size() < k) throw DomainError("seed set shorter than k = " + std::to_string(k));
  for (NodeId s : seeds.first(k)) g.check_node(s);

  BfsWorkspace bfs(g.node_count());
  std::vector<bool> seen(g.node_count(), false);
  CoverageReport report;
  for (NodeId s : seeds.first(k)) {
    for_each_cn12(g, bfs, s, [&](NodeId w) {
      ++report.total;
      if (!seen[w]) {
        seen[w] = true;
        ++report.unique;
      }
    });
  }
  if (report.total == 0) {
    report.degenerate = true;
    report.cov_percent = 0.0;
  } else {
    report.cov_percent = cov_percent(report.total, report.unique);
  }
  return report;
}

CoverageReport cn12_coverage(const Graph& g, const SeedSet& seeds, std::size_t k) {
  return cn12_coverage(g, seeds.seeds, k);
}

double unique_influenced_percent(const Graph& g, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw DomainError("unique-influenced rate of an empty seed set");
  for (NodeId s : seeds) g.check_node(s);
  BfsWorkspace bfs(g.node_count());
  std::vector<bool> seen(g.node_count(), false);
  std::size_t unique = 0;
  for (NodeId s : seeds) {
    for_each_cn12(g, bfs, s, [&](NodeId w) {
      if (!seen[w]) {
        seen[w] = true;
        ++unique;
      }
    });
  }
  return 100.0 * static_cast<double>(unique) / static_cast<double>(g.node_count());
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("pearson: vectors differ in length");
  if (x.size() < 2) throw DomainError("pearson: need at least two observations");
  const auto n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw UndefinedCorrelationError("pearson: zero variance in an input vector");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> rank_surrogate_scores(const SeedSet& seeds, NodeId node_count) {
  std::vector<double> scores(node_count, 0.0);
  const auto k = static_cast<double>(seeds.seeds.size());
  for (std::size_t rank = 0; rank < seeds.seeds.size(); ++rank) {
    const NodeId v = seeds.seeds[rank];
    if (v >= node_count) throw DomainError("seed outside the node range");
    scores[v] = k - static_cast<double>(rank);
  }
  return scores;
}

}  // namespace infseed
