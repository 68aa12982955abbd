#include <algorithm>
#include <vector>

#include "infseed/centrality.hpp"

namespace infseed {

// Batagelj-Zaversnik bucket peeling, O(n + m).
ScoreVector kshell_decomposition(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.neighbors(v, View::Undirected).size();
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (auto& b : bin) {
    const auto count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> vert(n);
  std::vector<std::size_t> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = vert[i];
    for (NodeId u : g.neighbors(v, View::Undirected)) {
      if (deg[u] <= deg[v]) continue;
      // Move u to the front of its bucket, then shrink it by one.
      const std::size_t du = deg[u];
      const std::size_t pu = pos[u];
      const std::size_t pw = bin[du];
      const NodeId w = vert[pw];
      if (u != w) {
        std::swap(vert[pu], vert[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }

  std::vector<double> scores(n);
  for (NodeId v = 0; v < n; ++v) scores[v] = static_cast<double>(deg[v]);
  return ScoreVector::from_scores(Method::KShell, std::move(scores));
}

}  // namespace infseed
