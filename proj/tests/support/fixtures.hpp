#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "infseed/graph.hpp"

namespace infseed::testing {

inline std::filesystem::path data_dir() { return INFSEED_TEST_DATA_DIR; }

/// The 19-node example network; labels 1..19 in the file.
inline Graph sample_network() {
  return load_edge_list(data_dir() / "sample_network_19.txt", Directedness::Undirected);
}

/// Two degree-4 hubs joined by one edge; labels 1..10.
inline Graph bridge_network() {
  return load_edge_list(data_dir() / "bridge_network_10.txt", Directedness::Undirected);
}

/// Dense id of a file label.
inline NodeId id(const Graph& g, std::int64_t label) {
  auto v = g.find_original(label);
  if (!v) throw std::out_of_range("no node labelled " + std::to_string(label));
  return *v;
}

inline std::vector<std::int64_t> labels(const Graph& g, const std::vector<NodeId>& nodes) {
  std::vector<std::int64_t> out;
  for (NodeId v : nodes) out.push_back(g.original_id(v));
  return out;
}

inline Graph make(NodeId n, std::vector<Graph::Edge> edges,
                  Directedness d = Directedness::Undirected) {
  return Graph::from_edges(n, edges, d);
}

inline Graph path_graph(NodeId n, Directedness d = Directedness::Undirected) {
  std::vector<Graph::Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e, d);
}

inline Graph cycle_graph(NodeId n) {
  std::vector<Graph::Edge> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make(n, e);
}

inline Graph complete_graph(NodeId n) {
  std::vector<Graph::Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make(n, e);
}

/// Every simple undirected graph on n nodes (2^(n(n-1)/2) of them).
inline std::vector<Graph> all_simple_graphs(NodeId n) {
  std::vector<Graph::Edge> pairs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Graph::Edge> e;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) e.push_back(pairs[b]);
    out.push_back(make(n, e));
  }
  return out;
}

/// Center 0, leaves 1..leaves.
inline Graph star_graph(NodeId leaves) {
  std::vector<Graph::Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make(leaves + 1, e);
}

}  // namespace infseed::testing
