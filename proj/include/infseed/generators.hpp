#pragma once

#include <cstdint>

#include "infseed/graph.hpp"

namespace infseed {

/// Preferential attachment: starts from a clique on edges_per_node + 1
/// nodes, then each new node links to edges_per_node distinct existing
/// nodes chosen proportionally to degree.
Graph barabasi_albert(NodeId node_count, NodeId edges_per_node, std::uint64_t seed);

/// Co-authorship style network. Papers are added one at a time; a paper
/// has 2 + Geometric(mean_extra_authors) authors and becomes a clique.
/// Each author slot is filled by a new author with probability
/// new_author_probability, otherwise by an existing author, picked by paper
/// count with probability preferential_share and uniformly otherwise.
/// Stops once `authors` authors exist.
struct CollaborationParams {
  NodeId authors = 1000;
  double mean_extra_authors = 1.0;
  double new_author_probability = 0.3;
  double preferential_share = 0.5;
};
Graph collaboration_graph(const CollaborationParams& params, std::uint64_t seed);

/// G(n, p); directed graphs draw each ordered pair independently.
Graph erdos_renyi(NodeId node_count, double edge_probability, Directedness directedness,
                  std::uint64_t seed);

/// Exactly `edge_count` distinct edges drawn uniformly (no self-loops).
Graph random_graph_with_edges(NodeId node_count, std::size_t edge_count,
                              Directedness directedness, std::uint64_t seed);

}  // namespace infseed
