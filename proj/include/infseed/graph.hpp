#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace infseed {

using NodeId = std::uint32_t;
/// Index of a stored arc (position in the out-adjacency array).
using ArcId = std::uint64_t;

enum class Directedness { Undirected, Directed };

/// Which adjacency a query walks. `Undirected` ignores arc direction on
/// directed graphs and is identical to `AsStored` on undirected ones.
enum class View { AsStored, Undirected };

/// Counters collected while ingesting edges.
struct LoadSummary {
  std::size_t lines_read = 0;
  std::size_t edges_read = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Immutable compressed-sparse-row network.
///
/// Node ids are dense (0..node_count-1). Self-loops and parallel edges are
/// removed on construction. Undirected graphs keep each edge once in
/// edge_count() but list it in both endpoints' adjacency. Every adjacency
/// list is sorted ascending.
class Graph {
 public:
  using Edge = std::pair<NodeId, NodeId>;

  Graph() = default;

  /// Builds from dense-id edges. `original_ids`, when non-empty, must have
  /// `node_count` entries and maps dense ids back to the input labels.
  static Graph from_edges(NodeId node_count, std::span<const Edge> edges, Directedness directedness,
                          std::vector<std::int64_t> original_ids = {},
                          LoadSummary* summary = nullptr);

  bool directed() const noexcept { return directed_; }
  NodeId node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// Number of stored arcs: edge_count for directed, 2*edge_count otherwise.
  std::size_t arc_count() const noexcept { return out_.targets.size(); }

  std::span<const NodeId> out_neighbors(NodeId v) const { return out_.row(v); }
  std::span<const NodeId> in_neighbors(NodeId v) const { return directed_ ? in_.row(v) : out_.row(v); }
  std::span<const NodeId> neighbors(NodeId v, View view) const {
    return (directed_ && view == View::Undirected) ? undirected_.row(v) : out_.row(v);
  }

  /// Arc id of the first out-arc of v; out-arcs of v are contiguous.
  ArcId first_arc(NodeId v) const { return out_.offsets[v]; }

  std::size_t out_degree(NodeId v) const { return out_.row(v).size(); }
  std::size_t in_degree(NodeId v) const { return in_neighbors(v).size(); }

  std::int64_t original_id(NodeId v) const {
    return original_ids_.empty() ? static_cast<std::int64_t>(v) : original_ids_[v];
  }
  std::optional<NodeId> find_original(std::int64_t label) const;

  bool contains(NodeId v) const noexcept { return v < node_count_; }
  /// Throws DomainError when v is not a node of this graph.
  void check_node(NodeId v) const;

  bool has_arc(NodeId from, NodeId to, View view) const;

 private:
  struct Csr {
    std::vector<std::size_t> offsets{0};
    std::vector<NodeId> targets;

    std::span<const NodeId> row(NodeId v) const {
      return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
  };

  static Csr build_csr(NodeId node_count, std::span<const Edge> sorted_arcs);

  bool directed_ = false;
  NodeId node_count_ = 0;
  std::size_t edge_count_ = 0;
  Csr out_;
  Csr in_;
  Csr undirected_;
  std::vector<std::int64_t> original_ids_;
  std::vector<std::pair<std::int64_t, NodeId>> label_index_;
};

/// Out-degree on directed graphs, neighbor count otherwise.
std::size_t degree(const Graph& g, NodeId v);

/// Parses a whitespace-separated edge list. Lines starting with `%` or `#`
/// are comments; tokens after the first two on a line are ignored. Labels
/// are remapped to dense ids in order of first appearance.
Graph load_edge_list(std::istream& in, Directedness directedness, LoadSummary* summary = nullptr);
Graph load_edge_list(const std::filesystem::path& path, Directedness directedness,
                     LoadSummary* summary = nullptr);

}  // namespace infseed
