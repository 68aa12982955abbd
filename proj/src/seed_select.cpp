#include "infseed/seed_select.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "infseed/error.hpp"
#include "infseed/neighborhood.hpp"
#include "infseed/random.hpp"

namespace infseed {

double influence_score(const Graph& g, NodeId v, NodeId s_prime, const InfluenceModel& model) {
  g.check_node(v);
  g.check_node(s_prime);
  if (v == s_prime) throw DomainError("influence score of a node on itself");
  const double p = model(v, s_prime);
  const double direct = g.has_arc(v, s_prime, View::Undirected) ? p : 0.0;
  const auto shared = static_cast<double>(common_neighbor_count(g, v, s_prime, View::Undirected));
  return direct + (p * p) * shared;
}

std::vector<NodeId> degree_order(const Graph& g) {
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return g.out_degree(a) > g.out_degree(b); });
  return order;
}

namespace {

/// Candidate scan shared by the distance-threshold selectors. `rejects(seed, candidate)`
/// decides whether a seed closer than the threshold vetoes the candidate.
template <class Rejects>
SeedSet scan_by_degree(const Graph& g, const SelectionConfig& config, Method method,
                       Rejects&& rejects) {
  config.validate();
  SeedSet set;
  set.method = method;
  set.config = config;

  std::vector<bool> is_seed(g.node_count(), false);
  BfsWorkspace bfs(g.node_count());
  const std::uint32_t reach = config.distance_threshold - 1;

  for (NodeId candidate : degree_order(g)) {
    if (set.seeds.size() >= config.k) break;
    ++set.candidates_examined;
    const bool accepted =
        bfs.run(g, candidate, View::Undirected, reach, [&](NodeId w, std::uint32_t d) {
          return d == 0 || !is_seed[w] || !rejects(w, candidate);
        });
    if (accepted) {
      is_seed[candidate] = true;
      set.seeds.push_back(candidate);
    }
  }
  set.exhausted = set.seeds.size() < config.k;
  return set;
}

}  // namespace

SeedSet degreedistance_select(const Graph& g, const SelectionConfig& config) {
  return scan_by_degree(g, config, Method::DegreeDistance, [](NodeId, NodeId) { return true; });
}

SeedSet degreedistance2_select(const Graph& g, std::size_t k) {
  SelectionConfig config;
  config.k = k;
  config.distance_threshold = 2;
  config.validate();

  SeedSet set;
  set.method = Method::DegreeDistance2;
  set.config = config;
  std::vector<bool> removed(g.node_count(), false);
  for (NodeId candidate : degree_order(g)) {
    if (set.seeds.size() >= k) break;
    if (removed[candidate]) continue;
    ++set.candidates_examined;
    set.seeds.push_back(candidate);
    removed[candidate] = true;
    for (NodeId w : g.neighbors(candidate, View::Undirected)) removed[w] = true;
  }
  set.exhausted = set.seeds.size() < k;
  return set;
}

SeedSet fidd_select(const Graph& g, const SelectionConfig& config) {
  const std::size_t theta = resolve_theta(g, config);
  return scan_by_degree(g, config, Method::Fidd, [&](NodeId seed, NodeId candidate) {
    if (theta == kUnboundedTheta) return false;
    return common_neighbor_count(g, candidate, seed, View::Undirected) >= theta;
  });
}

SeedSet sidd_select(const Graph& g, const SelectionConfig& config) {
  const std::size_t theta = resolve_theta(g, config);
  const InfluenceModel model{config.pair_probability};
  return scan_by_degree(g, config, Method::Sidd, [&](NodeId seed, NodeId candidate) {
    if (theta == kUnboundedTheta) return false;
    const auto shared = common_neighbor_count(g, candidate, seed, View::Undirected);
    const double inf = influence_score(g, seed, candidate, model);
    return shared >= theta && inf >= config.beta;
  });
}

SeedSet random_select(const Graph& g, std::size_t k, std::uint64_t rng_seed) {
  const NodeId n = g.node_count();
  if (k > n)
    throw DomainError("k = " + std::to_string(k) + " exceeds node count " + std::to_string(n));
  Rng rng(rng_seed);
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  SeedSet set;
  set.method = Method::Random;
  set.config.k = k;
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
    set.seeds.push_back(pool[i]);
  }
  set.candidates_examined = k;
  return set;
}

}  // namespace infseed
