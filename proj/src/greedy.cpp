#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "infseed/centrality.hpp"
#include "infseed/error.hpp"

namespace infseed {
namespace {

struct Scratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::vector<NodeId> queue;
};

/// Live-edge samples shared by every candidate, plus the set of nodes the
/// current seed set already reaches in each sample.
class CoverageSamples {
 public:
  CoverageSamples(const Graph& g, const ICParams& ic, std::size_t replications)
      : g_(g), p_(ic.p), words_((g.node_count() + 63) / 64) {
    streams_.reserve(replications);
    for (std::size_t r = 0; r < replications; ++r) streams_.emplace_back(ic.master_seed, r);
    covered_.assign(replications * words_, 0);
  }

  std::size_t replications() const { return streams_.size(); }

  /// Number of nodes reachable from v in sample r that are not yet covered.
  std::uint64_t gain(NodeId v, std::size_t r, Scratch& scratch) const {
    if (is_covered(r, v)) return 0;
    auto& [stamp, epoch, queue] = scratch;
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    queue.clear();
    queue.push_back(v);
    stamp[v] = epoch;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      const ArcId base = g_.first_arc(u);
      const auto row = g_.out_neighbors(u);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const NodeId w = row[i];
        if (stamp[w] == epoch || is_covered(r, w)) continue;
        if (streams_[r].uniform(base + i) < p_) {
          stamp[w] = epoch;
          queue.push_back(w);
        }
      }
    }
    return queue.size();
  }

  void cover_from(NodeId v, std::size_t r, std::vector<NodeId>& queue) {
    if (is_covered(r, v)) return;
    queue.clear();
    queue.push_back(v);
    set_covered(r, v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      const ArcId base = g_.first_arc(u);
      const auto row = g_.out_neighbors(u);
      for (std::size_t i = 0; i < row.size(); ++i) {
        const NodeId w = row[i];
        if (is_covered(r, w)) continue;
        if (streams_[r].uniform(base + i) < p_) {
          set_covered(r, w);
          queue.push_back(w);
        }
      }
    }
  }

 private:
  bool is_covered(std::size_t r, NodeId v) const {
    return (covered_[r * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void set_covered(std::size_t r, NodeId v) { covered_[r * words_ + v / 64] |= 1ULL << (v % 64); }

  const Graph& g_;
  double p_;
  std::size_t words_;
  std::vector<ReplicationStream> streams_;
  std::vector<std::uint64_t> covered_;
};

struct Candidate {
  std::uint64_t gain;
  NodeId node;
  std::size_t round;
};

struct CandidateOrder {
  // std::priority_queue pops the "largest": highest gain, then lowest id.
  bool operator()(const Candidate& a, const Candidate& b) const {
    return a.gain != b.gain ? a.gain < b.gain : a.node > b.node;
  }
};

}  // namespace

SeedSet greedy_select(const Graph& g, std::size_t k, const ICParams& ic,
                      std::size_t replications) {
  ic.validate();
  const NodeId n = g.node_count();
  if (k > n)
    throw DomainError("k = " + std::to_string(k) + " exceeds node count " + std::to_string(n));
  if (replications < 1) throw DomainError("greedy needs at least one replication");

  CoverageSamples samples(g, ic, replications);
  const auto reps = static_cast<std::int64_t>(replications);

  std::vector<Scratch> scratch(static_cast<std::size_t>(omp_get_max_threads()));
  for (auto& s : scratch) s.stamp.assign(n, 0);

  std::vector<std::uint64_t> initial(n, 0);
#pragma omp parallel
  {
    auto& local = scratch[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      std::uint64_t total = 0;
      for (std::int64_t r = 0; r < reps; ++r)
        total += samples.gain(static_cast<NodeId>(v), static_cast<std::size_t>(r), local);
      initial[v] = total;
    }
  }

  std::priority_queue<Candidate, std::vector<Candidate>, CandidateOrder> heap;
  for (NodeId v = 0; v < n; ++v) heap.push({initial[v], v, 0});

  SeedSet set;
  set.method = Method::Greedy;
  set.config.k = k;
  std::vector<std::uint64_t> per_rep(replications);
  while (set.seeds.size() < k) {
    Candidate top = heap.top();
    heap.pop();
    ++set.candidates_examined;
    const std::size_t round = set.seeds.size();
    if (top.round == round) {
      set.seeds.push_back(top.node);
#pragma omp parallel
      {
        auto& local = scratch[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (std::int64_t r = 0; r < reps; ++r)
          samples.cover_from(top.node, static_cast<std::size_t>(r), local.queue);
      }
      continue;
    }
    // Stale upper bound: recompute against the current seed set.
#pragma omp parallel
    {
      auto& local = scratch[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t r = 0; r < reps; ++r)
        per_rep[r] = samples.gain(top.node, static_cast<std::size_t>(r), local);
    }
    std::uint64_t total = 0;
    for (auto x : per_rep) total += x;
    heap.push({total, top.node, round});
  }
  return set;
}

}  // namespace infseed
