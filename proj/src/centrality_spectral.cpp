#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "infseed/centrality.hpp"
#include "infseed/error.hpp"

namespace infseed {
namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

ScoreVector ScoreVector::from_scores(Method measure, std::vector<double> scores) {
  ScoreVector sv;
  sv.measure = measure;
  sv.ranking.resize(scores.size());
  std::iota(sv.ranking.begin(), sv.ranking.end(), NodeId{0});
  std::stable_sort(sv.ranking.begin(), sv.ranking.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  sv.scores = std::move(scores);
  return sv;
}

SeedSet ScoreVector::top(std::size_t k) const {
  if (k > ranking.size())
    throw DomainError("k = " + std::to_string(k) + " exceeds node count " +
                      std::to_string(ranking.size()));
  SeedSet set;
  set.method = measure;
  set.config.k = k;
  set.seeds.assign(ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(k));
  set.candidates_examined = k;
  return set;
}

ScoreVector degree_centrality(const Graph& g) {
  std::vector<double> scores(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) scores[v] = static_cast<double>(g.out_degree(v));
  return ScoreVector::from_scores(Method::Degree, std::move(scores));
}

double spectral_radius(const Graph& g, View view, const PowerIterationParams& params) {
  const NodeId n = g.node_count();
  if (n == 0) return 0.0;
  std::vector<double> x(n, 1.0 / n);
  std::vector<double> next(n);
  double lambda = 0.0;
  for (std::size_t it = 0; it < params.max_iterations; ++it) {
    double norm = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double acc = x[i];
      for (NodeId j : g.neighbors(i, view)) acc += x[j];
      next[i] = acc;
      norm += acc;
    }
    // x is L1-normalized, so the norm of (A + I) x estimates rho + 1.
    const double estimate = norm - 1.0;
    for (auto& v : next) v /= norm;
    x.swap(next);
    if (it > 0 && std::abs(estimate - lambda) <= params.tolerance * std::max(1.0, estimate))
      return estimate;
    lambda = estimate;
  }
  return lambda;
}

ScoreVector katz_centrality(const Graph& g, const KatzParams& params) {
  if (!(params.beta >= 0.0 && params.beta <= 1.0))
    throw DomainError("Katz beta must lie in [0, 1]");
  const NodeId n = g.node_count();
  if (params.beta > 0.0) {
    const double rho = spectral_radius(g, View::AsStored);
    if (params.beta * rho >= 1.0)
      throw DomainError("Katz beta " + std::to_string(params.beta) +
                        " violates beta < 1/spectral radius (" + std::to_string(rho) + ")");
  }
  std::vector<double> x(n, 0.0);
  std::vector<double> next(n);
  double residual = 0.0;
  for (std::size_t it = 0; it < params.max_iterations; ++it) {
    for (NodeId i = 0; i < n; ++i) {
      double acc = 0.0;
      for (NodeId j : g.out_neighbors(i)) acc += x[j] + 1.0;
      next[i] = params.beta * acc;
    }
    residual = max_abs_diff(next, x);
    x.swap(next);
    if (residual < params.tolerance) return ScoreVector::from_scores(Method::Katz, std::move(x));
  }
  throw ConvergenceError("Katz series did not converge", residual);
}

ScoreVector eigenvector_centrality(const Graph& g, const PowerIterationParams& params) {
  if (g.edge_count() == 0) throw DomainError("eigenvector centrality needs at least one edge");
  const NodeId n = g.node_count();
  std::vector<double> x(n, 1.0);
  std::vector<double> next(n);
  double residual = 0.0;
  for (std::size_t it = 0; it < params.max_iterations; ++it) {
    // Shifted by the identity so bipartite graphs do not oscillate.
    double top = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double acc = x[i];
      for (NodeId j : g.neighbors(i, View::Undirected)) acc += x[j];
      next[i] = acc;
      top = std::max(top, acc);
    }
    for (auto& v : next) v /= top;
    residual = max_abs_diff(next, x);
    x.swap(next);
    if (residual < params.tolerance)
      return ScoreVector::from_scores(Method::Eigenvector, std::move(x));
  }
  throw ConvergenceError("eigenvector power iteration did not converge", residual);
}

ScoreVector pagerank(const Graph& g, const PageRankParams& params) {
  if (!(params.damping > 0.0 && params.damping < 1.0))
    throw DomainError("PageRank damping must lie in (0, 1)");
  const NodeId n = g.node_count();
  if (n == 0) return ScoreVector::from_scores(Method::PageRank, {});
  const double inv_n = 1.0 / n;
  std::vector<double> x(n, inv_n);
  std::vector<double> next(n);
  double residual = 0.0;
  for (std::size_t it = 0; it < params.max_iterations; ++it) {
    double dangling = 0.0;
    for (NodeId j = 0; j < n; ++j)
      if (g.out_degree(j) == 0) dangling += x[j];
    const double base = (1.0 - params.damping) * inv_n + params.damping * dangling * inv_n;
    residual = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      double acc = 0.0;
      for (NodeId j : g.in_neighbors(i)) acc += x[j] / static_cast<double>(g.out_degree(j));
      next[i] = base + params.damping * acc;
      residual += std::abs(next[i] - x[i]);
    }
    x.swap(next);
    if (residual < params.tolerance)
      return ScoreVector::from_scores(Method::PageRank, std::move(x));
  }
  throw ConvergenceError("PageRank did not converge", residual);
}

ScoreVector leaderrank(const Graph& g, const PowerIterationParams& params) {
  const NodeId n = g.node_count();
  // With no edges the augmented walk is periodic; its stationary split
  // gives every node exactly 1.
  if (g.edge_count() == 0) return ScoreVector::from_scores(Method::LeaderRank,
                                                           std::vector<double>(n, 1.0));
  std::vector<double> s(n, 1.0);
  std::vector<double> next(n);
  double ground = 0.0;
  double residual = 0.0;
  for (std::size_t it = 0; it < params.max_iterations; ++it) {
    const double from_ground = ground / n;
    double to_ground = 0.0;
    residual = 0.0;
    for (NodeId j = 0; j < n; ++j) to_ground += s[j] / static_cast<double>(g.out_degree(j) + 1);
    for (NodeId i = 0; i < n; ++i) {
      double acc = from_ground;
      for (NodeId j : g.in_neighbors(i)) acc += s[j] / static_cast<double>(g.out_degree(j) + 1);
      next[i] = acc;
      residual = std::max(residual, std::abs(acc - s[i]));
    }
    residual = std::max(residual, std::abs(to_ground - ground));
    s.swap(next);
    ground = to_ground;
    if (residual < params.tolerance) {
      for (auto& v : s) v += ground / n;
      return ScoreVector::from_scores(Method::LeaderRank, std::move(s));
    }
  }
  throw ConvergenceError("LeaderRank did not converge", residual);
}

}  // namespace infseed
