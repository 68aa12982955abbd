#include "infseed/graph.hpp"

#include <algorithm>
#include <string>

#include "infseed/error.hpp"

namespace infseed {

Graph::Csr Graph::build_csr(NodeId node_count, std::span<const Edge> sorted_arcs) {
  Csr csr;
  csr.offsets.assign(static_cast<std::size_t>(node_count) + 1, 0);
  csr.targets.reserve(sorted_arcs.size());
  for (const auto& [from, to] : sorted_arcs) {
    ++csr.offsets[from + 1];
    csr.targets.push_back(to);
  }
  for (std::size_t v = 0; v < node_count; ++v) csr.offsets[v + 1] += csr.offsets[v];
  return csr;
}

Graph Graph::from_edges(NodeId node_count, std::span<const Edge> edges, Directedness directedness,
                        std::vector<std::int64_t> original_ids, LoadSummary* summary) {
  if (!original_ids.empty() && original_ids.size() != node_count)
    throw DomainError("original id table size does not match node count");

  Graph g;
  g.directed_ = directedness == Directedness::Directed;
  g.node_count_ = node_count;

  std::vector<Edge> arcs;
  arcs.reserve(edges.size());
  std::size_t self_loops = 0;
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw DomainError("edge endpoint " + std::to_string(std::max(u, v)) + " out of range");
    if (u == v) {
      ++self_loops;
      continue;
    }
    if (!g.directed_ && u > v) std::swap(u, v);
    arcs.emplace_back(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  const auto kept = std::unique(arcs.begin(), arcs.end());
  const std::size_t duplicates = static_cast<std::size_t>(arcs.end() - kept);
  arcs.erase(kept, arcs.end());
  g.edge_count_ = arcs.size();

  if (summary) {
    summary->edges_read = edges.size();
    summary->self_loops_dropped = self_loops;
    summary->duplicates_dropped = duplicates;
  }

  auto reversed = [](std::vector<Edge> list) {
    for (auto& [u, v] : list) std::swap(u, v);
    std::sort(list.begin(), list.end());
    return list;
  };

  if (g.directed_) {
    g.out_ = build_csr(node_count, arcs);
    auto back = reversed(arcs);
    g.in_ = build_csr(node_count, back);

    std::vector<Edge> both;
    both.reserve(arcs.size() * 2);
    std::merge(arcs.begin(), arcs.end(), back.begin(), back.end(), std::back_inserter(both));
    both.erase(std::unique(both.begin(), both.end()), both.end());
    g.undirected_ = build_csr(node_count, both);
  } else {
    auto back = reversed(arcs);
    std::vector<Edge> both;
    both.reserve(arcs.size() * 2);
    std::merge(arcs.begin(), arcs.end(), back.begin(), back.end(), std::back_inserter(both));
    g.out_ = build_csr(node_count, both);
  }

  g.original_ids_ = std::move(original_ids);
  if (!g.original_ids_.empty()) {
    g.label_index_.reserve(node_count);
    for (NodeId v = 0; v < node_count; ++v) g.label_index_.emplace_back(g.original_ids_[v], v);
    std::sort(g.label_index_.begin(), g.label_index_.end());
  }
  return g;
}

std::optional<NodeId> Graph::find_original(std::int64_t label) const {
  if (original_ids_.empty()) {
    if (label < 0 || label >= static_cast<std::int64_t>(node_count_)) return std::nullopt;
    return static_cast<NodeId>(label);
  }
  auto it = std::lower_bound(label_index_.begin(), label_index_.end(),
                             std::pair<std::int64_t, NodeId>{label, 0});
  if (it == label_index_.end() || it->first != label) return std::nullopt;
  return it->second;
}

void Graph::check_node(NodeId v) const {
  if (v >= node_count_)
    throw DomainError("node id " + std::to_string(v) + " out of range (node count " +
                      std::to_string(node_count_) + ")");
}

bool Graph::has_arc(NodeId from, NodeId to, View view) const {
  auto row = neighbors(from, view);
  return std::binary_search(row.begin(), row.end(), to);
}

std::size_t degree(const Graph& g, NodeId v) {
  g.check_node(v);
  return g.out_degree(v);
}

}  // namespace infseed
