#include "infseed/neighborhood.hpp"

#include <algorithm>
#include <iterator>

#include "infseed/error.hpp"

namespace infseed {

void NeighborhoodQueryConfig::validate() const {
  if (max_radius < 1) throw DomainError("neighborhood radius must be at least 1");
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source, View view,
                                         std::uint32_t max_depth) {
  g.check_node(source);
  std::vector<std::uint32_t> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    if (dist[u] >= max_depth) continue;
    for (NodeId w : g.neighbors(u, view)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

std::optional<std::uint32_t> distance(const Graph& g, NodeId u, NodeId v, View view) {
  g.check_node(u);
  g.check_node(v);
  std::optional<std::uint32_t> found;
  BfsWorkspace bfs(g.node_count());
  bfs.run(g, u, view, kUnreachable, [&](NodeId w, std::uint32_t d) {
    if (w != v) return true;
    found = d;
    return false;
  });
  return found;
}

std::vector<std::vector<NodeId>> neighborhood_layers(const Graph& g, NodeId v,
                                                     const NeighborhoodQueryConfig& config) {
  config.validate();
  g.check_node(v);
  std::vector<std::vector<NodeId>> layers(config.max_radius);
  BfsWorkspace bfs(g.node_count());
  bfs.run(g, v, config.view, config.max_radius, [&](NodeId w, std::uint32_t d) {
    if (d > 0) layers[d - 1].push_back(w);
    return true;
  });
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());
  return layers;
}

std::vector<NodeId> neighbors_at(const Graph& g, NodeId v, std::uint32_t radius, View view) {
  if (radius < 1) throw DomainError("neighborhood radius must be at least 1");
  auto layers = neighborhood_layers(g, v, {radius, view});
  return std::move(layers.back());
}

std::vector<NodeId> common_neighbors_at(const Graph& g, std::span<const NodeId> nodes,
                                        std::uint32_t radius, View view) {
  if (nodes.empty()) throw DomainError("common neighbors of an empty node set");
  auto result = neighbors_at(g, nodes.front(), radius, view);
  for (std::size_t i = 1; i < nodes.size() && !result.empty(); ++i) {
    const auto layer = neighbors_at(g, nodes[i], radius, view);
    std::vector<NodeId> kept;
    std::set_intersection(result.begin(), result.end(), layer.begin(), layer.end(),
                          std::back_inserter(kept));
    result = std::move(kept);
  }
  return result;
}

std::size_t common_neighbor_count(const Graph& g, NodeId a, NodeId b, View view) {
  g.check_node(a);
  g.check_node(b);
  auto ra = g.neighbors(a, view);
  auto rb = g.neighbors(b, view);
  std::size_t count = 0;
  auto ia = ra.begin();
  auto ib = rb.begin();
  while (ia != ra.end() && ib != rb.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace infseed
