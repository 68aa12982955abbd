#pragma once

#include <cstdint>
#include <vector>

#include "infseed/graph.hpp"
#include "infseed/seed_set.hpp"

namespace infseed {

/// Pairwise influence probabilities. This library only models the constant
/// case P(v, w) = pair_probability.
struct InfluenceModel {
  double pair_probability = 0.01;

  double operator()(NodeId /*from*/, NodeId /*to*/) const noexcept { return pair_probability; }
};

/// Influence a seed v exerts on a candidate s_prime, directly and through
/// their common first neighbors (undirected view):
///   P(v, s') [v ~ s'] + sum over w in CN1(s', v) of P(v, w) P(w, s').
/// For the constant model this is evaluated as p + p^2 |CN1| (adjacent) or
/// p^2 |CN1| (not adjacent).
double influence_score(const Graph& g, NodeId v, NodeId s_prime, const InfluenceModel& model);

/// Nodes sorted by descending degree, ties by ascending id.
std::vector<NodeId> degree_order(const Graph& g);

/// Scans nodes by descending degree and accepts a candidate only if every
/// seed picked so far lies at undirected distance >= distance_threshold.
/// Stops at k seeds or when the candidates run out (exhausted flag set).
SeedSet degreedistance_select(const Graph& g, const SelectionConfig& config);

/// Distance threshold 2 by deletion: after each pick, the pick and its
/// neighbors leave the candidate list.
SeedSet degreedistance2_select(const Graph& g, std::size_t k);

/// DegreeDistance, except a near candidate is rejected only when it shares
/// at least theta first neighbors with the near seed.
SeedSet fidd_select(const Graph& g, const SelectionConfig& config);

/// FIDD, except rejection also requires influence_score(seed, candidate)
/// >= beta. The score is evaluated per seed, not accumulated.
SeedSet sidd_select(const Graph& g, const SelectionConfig& config);

/// k distinct nodes drawn uniformly, reproducible from rng_seed.
SeedSet random_select(const Graph& g, std::size_t k, std::uint64_t rng_seed);

}  // namespace infseed
