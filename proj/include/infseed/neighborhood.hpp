#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "infseed/graph.hpp"

namespace infseed {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Radius and adjacency view for layered neighborhood queries.
struct NeighborhoodQueryConfig {
  std::uint32_t max_radius = 1;
  View view = View::AsStored;

  void validate() const;
};

/// Reusable breadth-first search with an epoch-stamped visited array, so a
/// bounded search costs O(visited) rather than O(node_count).
class BfsWorkspace {
 public:
  explicit BfsWorkspace(NodeId node_count) : stamp_(node_count, 0), depth_(node_count, 0) {}

  /// Visits every node within `max_depth` hops of `source` in BFS order,
  /// calling visit(node, depth). visit may return false to stop early.
  /// Returns false iff the search was stopped.
  template <class Visit>
  bool run(const Graph& g, NodeId source, View view, std::uint32_t max_depth, Visit&& visit) {
    next_epoch();
    queue_.clear();
    mark(source, 0);
    queue_.push_back(source);
    if (!visit(source, 0u)) return false;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const NodeId u = queue_[head];
      const std::uint32_t du = depth_[u];
      if (du >= max_depth) continue;
      for (NodeId w : g.neighbors(u, view)) {
        if (stamp_[w] == epoch_) continue;
        mark(w, du + 1);
        queue_.push_back(w);
        if (!visit(w, du + 1)) return false;
      }
    }
    return true;
  }

 private:
  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  void mark(NodeId v, std::uint32_t d) {
    stamp_[v] = epoch_;
    depth_[v] = d;
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> depth_;
  std::vector<NodeId> queue_;
  std::uint32_t epoch_ = 0;
};

/// Hop distances from source; kUnreachable where no path exists or beyond
/// max_depth.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source, View view,
                                         std::uint32_t max_depth = kUnreachable);

/// Shortest-path hop count, or nullopt when v is unreachable from u.
std::optional<std::uint32_t> distance(const Graph& g, NodeId u, NodeId v, View view);

/// Nodes at exactly `radius` hops from v, sorted ascending.
std::vector<NodeId> neighbors_at(const Graph& g, NodeId v, std::uint32_t radius, View view);

/// Layers 1..max_radius around v; result[i-1] holds the nodes at distance i.
std::vector<std::vector<NodeId>> neighborhood_layers(const Graph& g, NodeId v,
                                                     const NeighborhoodQueryConfig& config);

/// Intersection of neighbors_at over every node in `nodes` (sorted).
std::vector<NodeId> common_neighbors_at(const Graph& g, std::span<const NodeId> nodes,
                                        std::uint32_t radius, View view);

/// |neighbors_at(a,1) ∩ neighbors_at(b,1)| via sorted-list intersection.
std::size_t common_neighbor_count(const Graph& g, NodeId a, NodeId b, View view);

}  // namespace infseed
