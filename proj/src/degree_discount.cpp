#include <set>
#include <string>
#include <utility>
#include <vector>

#include "infseed/centrality.hpp"
#include "infseed/error.hpp"

namespace infseed {

SeedSet degreediscount_select(const Graph& g, std::size_t k, const DegreeDiscountParams& params) {
  const NodeId n = g.node_count();
  if (k > n)
    throw DomainError("k = " + std::to_string(k) + " exceeds node count " + std::to_string(n));
  if (!(params.p > 0.0 && params.p <= 1.0))
    throw DomainError("degree-discount probability must lie in (0, 1]");

  std::vector<double> dd(n);
  std::vector<std::size_t> chosen_neighbors(n, 0);
  std::vector<bool> selected(n, false);

  // Highest discounted degree first, ties to the lower id.
  auto cmp = [](const std::pair<double, NodeId>& a, const std::pair<double, NodeId>& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  };
  std::set<std::pair<double, NodeId>, decltype(cmp)> queue(cmp);
  for (NodeId v = 0; v < n; ++v) {
    dd[v] = static_cast<double>(g.out_degree(v));
    queue.emplace(dd[v], v);
  }

  SeedSet set;
  set.method = Method::DegreeDiscount;
  set.config.k = k;
  while (set.seeds.size() < k) {
    const NodeId s = queue.begin()->second;
    queue.erase(queue.begin());
    selected[s] = true;
    set.seeds.push_back(s);
    ++set.candidates_examined;
    // u loses credit for its arc into the new seed.
    for (NodeId u : g.in_neighbors(s)) {
      if (selected[u]) continue;
      queue.erase({dd[u], u});
      const double d = static_cast<double>(g.out_degree(u));
      const double t = static_cast<double>(++chosen_neighbors[u]);
      dd[u] = d - 2.0 * t - (d - t) * t * params.p;
      queue.emplace(dd[u], u);
    }
  }
  return set;
}

}  // namespace infseed
