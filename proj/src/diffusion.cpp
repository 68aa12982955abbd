#include "infseed/diffusion.hpp"

#include <cmath>
#include <cstdint>

#include "infseed/error.hpp"

namespace infseed {

void ICParams::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("IC probability must lie in [0, 1]");
  if (replications < 1) throw DomainError("replications must be at least 1");
}

double SpreadEstimate::standard_error() const {
  return replications == 0 ? 0.0 : stddev / std::sqrt(static_cast<double>(replications));
}

std::vector<std::uint32_t> cascade_sizes(const Graph& g, std::span<const NodeId> seeds,
                                         const ICParams& params) {
  params.validate();
  for (NodeId s : seeds) g.check_node(s);
  const auto reps = static_cast<std::int64_t>(params.replications);
  std::vector<std::uint32_t> sizes(params.replications, 0);
#pragma omp parallel
  {
    CascadeWorkspace ws(g.node_count());
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < reps; ++r) {
      const ReplicationStream stream(params.master_seed, static_cast<std::uint64_t>(r));
      sizes[r] = static_cast<std::uint32_t>(ws.run(g, seeds, params.p, stream).size());
    }
  }
  return sizes;
}

SpreadEstimate estimate_spread(const Graph& g, std::span<const NodeId> seeds,
                               const ICParams& params) {
  const auto sizes = cascade_sizes(g, seeds, params);
  // Welford, in replication order.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t n = 0;
  for (auto s : sizes) {
    ++n;
    const double x = s;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  SpreadEstimate est;
  est.mean = mean;
  est.stddev = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
  est.replications = n;
  return est;
}

}  // namespace infseed
