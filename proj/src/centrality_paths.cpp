#include <algorithm>
#include <cstdint>
#include <vector>

#include "infseed/centrality.hpp"
#include "infseed/neighborhood.hpp"

namespace infseed {

ScoreVector closeness_centrality(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<double> scores(n, 0.0);
#pragma omp parallel
  {
    BfsWorkspace bfs(n);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      std::uint64_t farness = 0;
      bfs.run(g, static_cast<NodeId>(s), View::AsStored, kUnreachable,
              [&](NodeId, std::uint32_t d) {
                farness += d;
                return true;
              });
      scores[s] = farness == 0 ? 0.0 : 1.0 / static_cast<double>(farness);
    }
  }
  return ScoreVector::from_scores(Method::Closeness, std::move(scores));
}

namespace {

/// Scratch for single-source shortest-path counting and dependency
/// accumulation.
struct BrandesState {
  explicit BrandesState(NodeId n) : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) {
    order.reserve(n);
  }

  void accumulate(const Graph& g, NodeId source, std::vector<double>& into) {
    order.clear();
    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId w : g.out_neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
      }
    }
    // Predecessors of w are its in-neighbors one level closer to the source.
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeId w = order[i];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (NodeId u : g.in_neighbors(w))
        if (dist[u] == dist[w] - 1) delta[u] += sigma[u] * coeff;
      into[w] += delta[w];
    }
    for (NodeId v : order) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
  }

  std::vector<std::int64_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;
};

// Sources are split into a fixed number of contiguous blocks; each block
// sums into its own buffer and buffers are added in block order, so the
// floating-point result does not depend on the thread count.
constexpr std::int64_t kBetweennessBlocks = 16;

}  // namespace

ScoreVector betweenness_centrality(const Graph& g) {
  const NodeId n = g.node_count();
  const std::int64_t blocks = std::min<std::int64_t>(kBetweennessBlocks, std::max<NodeId>(n, 1));
  std::vector<std::vector<double>> partial(blocks, std::vector<double>(n, 0.0));
#pragma omp parallel
  {
    BrandesState state(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const NodeId begin = static_cast<NodeId>(n * b / blocks);
      const NodeId end = static_cast<NodeId>(n * (b + 1) / blocks);
      for (NodeId s = begin; s < end; ++s) state.accumulate(g, s, partial[b]);
    }
  }
  std::vector<double> scores(n, 0.0);
  for (const auto& block : partial)
    for (NodeId v = 0; v < n; ++v) scores[v] += block[v];
  if (!g.directed())
    for (auto& s : scores) s /= 2.0;
  return ScoreVector::from_scores(Method::Betweenness, std::move(scores));
}

}  // namespace infseed
