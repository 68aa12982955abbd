#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "infseed/graph.hpp"

namespace infseed {

/// Independent-cascade parameters.
struct ICParams {
  /// Activation probability of each edge attempt.
  double p = 0.01;
  std::size_t replications = 10000;
  std::uint64_t master_seed = 1;

  void validate() const;
};

/// Monte Carlo estimate of the expected number of active nodes (seeds
/// included).
struct SpreadEstimate {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t replications = 0;

  double standard_error() const;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based uniform stream for one replication. The uniform for an arc
/// depends only on (master seed, replication, arc), so a cascade does not
/// depend on the order in which arcs are tried or on which thread runs it.
class ReplicationStream {
 public:
  ReplicationStream(std::uint64_t master_seed, std::uint64_t replication) noexcept
      : key_(mix64(mix64(master_seed) ^ (replication * 0xd1b54a32d192ed03ULL))) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform(ArcId arc) const noexcept {
    return static_cast<double>(mix64(key_ ^ mix64(arc)) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

/// Anything that assigns a uniform in [0, 1) to each arc. An arc is live in
/// a cascade iff its uniform is below p.
template <class S>
concept ArcUniformSource = requires(const S& s, ArcId a) {
  { s.uniform(a) } -> std::convertible_to<double>;
};

/// Scratch state for repeated cascades on one graph.
class CascadeWorkspace {
 public:
  explicit CascadeWorkspace(NodeId node_count) : stamp_(node_count, 0) {}

  /// Runs one cascade and returns the active nodes in activation order.
  /// Seeds are active at step 0; each newly active node tries its inactive
  /// out-neighbors once, in ascending id order.
  template <ArcUniformSource Source>
  std::span<const NodeId> run(const Graph& g, std::span<const NodeId> seeds, double p,
                              const Source& source) {
    next_epoch();
    active_.clear();
    for (NodeId s : seeds) {
      if (stamp_[s] == epoch_) continue;
      stamp_[s] = epoch_;
      active_.push_back(s);
    }
    for (std::size_t head = 0; head < active_.size(); ++head) {
      const NodeId u = active_[head];
      const ArcId base = g.first_arc(u);
      const auto row = g.out_neighbors(u);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const NodeId w = row[i];
        if (stamp_[w] == epoch_) continue;
        if (source.uniform(base + i) < p) {
          stamp_[w] = epoch_;
          active_.push_back(w);
        }
      }
    }
    return active_;
  }

 private:
  void next_epoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<NodeId> active_;
  std::uint32_t epoch_ = 0;
};

/// One independent cascade. Returns the activated nodes in activation order.
template <ArcUniformSource Source>
std::vector<NodeId> simulate_once(const Graph& g, std::span<const NodeId> seeds, double p,
                                  const Source& source) {
  for (NodeId s : seeds) g.check_node(s);
  CascadeWorkspace ws(g.node_count());
  auto active = ws.run(g, seeds, p, source);
  return {active.begin(), active.end()};
}

/// Mean and standard deviation of the cascade size over params.replications
/// cascades. Replication r uses ReplicationStream(master_seed, r); results
/// are reduced in replication order, so the output does not depend on the
/// thread count.
SpreadEstimate estimate_spread(const Graph& g, std::span<const NodeId> seeds,
                               const ICParams& params);

/// Per-replication cascade sizes, in replication order.
std::vector<std::uint32_t> cascade_sizes(const Graph& g, std::span<const NodeId> seeds,
                                         const ICParams& params);

}  // namespace infseed
