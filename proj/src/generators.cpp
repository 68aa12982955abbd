#include "infseed/generators.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "infseed/error.hpp"
#include "infseed/random.hpp"

namespace infseed {

Graph barabasi_albert(NodeId node_count, NodeId edges_per_node, std::uint64_t seed) {
  if (edges_per_node < 1 || node_count <= edges_per_node)
    throw DomainError("preferential attachment needs 1 <= m < n");
  Rng rng(seed);
  std::vector<Graph::Edge> edges;
  // Each endpoint appears once per incident edge, so a uniform pick from
  // this list is a degree-proportional pick.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u <= edges_per_node; ++u) {
    for (NodeId v = u + 1; v <= edges_per_node; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId v = edges_per_node + 1; v < node_count; ++v) {
    targets.clear();
    while (targets.size() < edges_per_node) {
      const NodeId t = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(node_count, edges, Directedness::Undirected);
}

Graph collaboration_graph(const CollaborationParams& params, std::uint64_t seed) {
  if (params.authors < 2) throw DomainError("collaboration graph needs at least two authors");
  if (!(params.mean_extra_authors >= 0.0))
    throw DomainError("mean extra authors must be non-negative");
  if (!(params.new_author_probability > 0.0 && params.new_author_probability <= 1.0))
    throw DomainError("new author probability must lie in (0, 1]");
  if (!(params.preferential_share >= 0.0 && params.preferential_share <= 1.0))
    throw DomainError("preferential share must lie in [0, 1]");

  Rng rng(seed);
  const double more = params.mean_extra_authors / (1.0 + params.mean_extra_authors);
  std::vector<Graph::Edge> edges;
  std::vector<NodeId> slots;  // one entry per (author, paper)
  std::vector<NodeId> team;
  NodeId created = 0;
  while (created < params.authors) {
    int size = 2;
    while (uniform_unit(rng) < more) ++size;
    team.clear();
    for (int i = 0; i < size; ++i) {
      const bool fresh = slots.empty() || uniform_unit(rng) < params.new_author_probability;
      if (fresh) {
        if (created == params.authors) break;
        team.push_back(created++);
        continue;
      }
      // A few retries keep duplicate picks from shrinking teams too often.
      for (int attempt = 0; attempt < 8; ++attempt) {
        const NodeId a = uniform_unit(rng) < params.preferential_share
                             ? slots[uniform_below(rng, slots.size())]
                             : static_cast<NodeId>(uniform_below(rng, created));
        if (std::find(team.begin(), team.end(), a) == team.end()) {
          team.push_back(a);
          break;
        }
      }
    }
    for (std::size_t i = 0; i < team.size(); ++i)
      for (std::size_t j = i + 1; j < team.size(); ++j) edges.emplace_back(team[i], team[j]);
    slots.insert(slots.end(), team.begin(), team.end());
  }
  return Graph::from_edges(params.authors, edges, Directedness::Undirected);
}

Graph erdos_renyi(NodeId node_count, double edge_probability, Directedness directedness,
                  std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw DomainError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Graph::Edge> edges;
  const bool directed = directedness == Directedness::Directed;
  for (NodeId u = 0; u < node_count; ++u)
    for (NodeId v = directed ? 0 : u + 1; v < node_count; ++v)
      if (u != v && uniform_unit(rng) < edge_probability) edges.emplace_back(u, v);
  return Graph::from_edges(node_count, edges, directedness);
}

Graph random_graph_with_edges(NodeId node_count, std::size_t edge_count,
                              Directedness directedness, std::uint64_t seed) {
  const bool directed = directedness == Directedness::Directed;
  const std::size_t n = node_count;
  const std::size_t possible = directed ? n * (n - 1) : n * (n - 1) / 2;
  if (node_count < 2 && edge_count > 0) throw DomainError("too few nodes for any edge");
  if (edge_count > possible)
    throw DomainError("cannot place " + std::to_string(edge_count) + " distinct edges");
  Rng rng(seed);
  std::set<Graph::Edge> chosen;
  std::vector<Graph::Edge> edges;
  while (edges.size() < edge_count) {
    auto u = static_cast<NodeId>(uniform_below(rng, n));
    auto v = static_cast<NodeId>(uniform_below(rng, n));
    if (u == v) continue;
    if (!directed && u > v) std::swap(u, v);
    if (chosen.insert({u, v}).second) edges.emplace_back(u, v);
  }
  return Graph::from_edges(node_count, edges, directedness);
}

}  // namespace infseed
