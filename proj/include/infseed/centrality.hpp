#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infseed/diffusion.hpp"
#include "infseed/graph.hpp"
#include "infseed/seed_set.hpp"

namespace infseed {

/// Per-node scores for one measure plus the induced ranking.
struct ScoreVector {
  Method measure = Method::Degree;
  std::vector<double> scores;
  /// Node ids by descending score; ties in ascending id.
  std::vector<NodeId> ranking;

  static ScoreVector from_scores(Method measure, std::vector<double> scores);

  /// The first k ranked nodes as a seed set. Throws DomainError if k
  /// exceeds the node count.
  SeedSet top(std::size_t k) const;
};

struct KatzParams {
  /// Attenuation factor; must satisfy beta * spectral_radius < 1.
  double beta = 0.1;
  double tolerance = 1e-9;
  std::size_t max_iterations = 10000;
};

struct PageRankParams {
  double damping = 0.85;
  double tolerance = 1e-9;
  std::size_t max_iterations = 200;
};

struct PowerIterationParams {
  double tolerance = 1e-9;
  std::size_t max_iterations = 10000;
};

struct DegreeDiscountParams {
  /// Propagation probability used in the discount term.
  double p = 0.01;
};

ScoreVector degree_centrality(const Graph& g);

/// Row sums of sum_{j>=1} (beta A)^j, by x <- beta A (x + 1).
ScoreVector katz_centrality(const Graph& g, const KatzParams& params = {});

/// Largest eigenvalue of the adjacency matrix in the given view, by power
/// iteration on A + I.
double spectral_radius(const Graph& g, View view, const PowerIterationParams& params = {});

/// 1 / (sum of hop distances to reachable nodes); 0 when nothing is
/// reachable. Distances follow arc direction on directed graphs.
ScoreVector closeness_centrality(const Graph& g);

/// Shortest-path betweenness by dependency accumulation. Undirected graphs
/// count each unordered pair once; directed graphs count ordered pairs.
ScoreVector betweenness_centrality(const Graph& g);

/// Dominant eigenvector of the undirected adjacency, scaled to max entry 1.
ScoreVector eigenvector_centrality(const Graph& g, const PowerIterationParams& params = {});

/// Random-surfer PageRank; dangling mass is spread uniformly.
ScoreVector pagerank(const Graph& g, const PageRankParams& params = {});

/// Parameter-free walk on the graph plus a ground node linked both ways to
/// every node. The ground node's final score is split evenly; real-node
/// scores sum to node_count.
ScoreVector leaderrank(const Graph& g, const PowerIterationParams& params = {});

/// Shell index (core number) in the undirected view. Isolated nodes get 0.
ScoreVector kshell_decomposition(const Graph& g);

/// Degree-discount heuristic: picks by d_u - [2 t_u + (d_u - t_u) t_u p],
/// where t_u counts u's out-neighbors already chosen.
SeedSet degreediscount_select(const Graph& g, std::size_t k,
                              const DegreeDiscountParams& params = {});

/// Hill-climbing on Monte Carlo spread. Every candidate in every round is
/// scored on the same `replications` live-edge samples, which makes the
/// estimate submodular and lets lazy (CELF) re-evaluation return exactly
/// the plain greedy answer. Ties go to the lowest id.
SeedSet greedy_select(const Graph& g, std::size_t k, const ICParams& ic,
                      std::size_t replications = 200);

}  // namespace infseed
