#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "infseed/graph.hpp"

namespace infseed {

/// Every way this library can produce a seed set.
enum class Method {
  Degree,
  Katz,
  Closeness,
  Betweenness,
  Eigenvector,
  PageRank,
  LeaderRank,
  KShell,
  DegreeDiscount,
  Greedy,
  DegreeDistance,
  DegreeDistance2,
  Fidd,
  Sidd,
  Random,
};

std::string_view method_name(Method method);
/// Inverse of method_name; also accepts a few aliases ("dd", "k-shell").
std::optional<Method> parse_method(std::string_view name);

/// θ value meaning "never reject on common-neighbor count".
inline constexpr std::size_t kUnboundedTheta = std::numeric_limits<std::size_t>::max();

/// Parameters of the distance-based selectors.
struct SelectionConfig {
  std::size_t k = 1;
  /// Minimum pairwise (undirected) hop distance between seeds.
  std::uint32_t distance_threshold = 2;
  /// Common-neighbor threshold; nullopt resolves to the average degree.
  std::optional<std::size_t> theta;
  /// Influence-score threshold used by SIDD.
  double beta = 0.01;
  /// Constant pairwise influence probability P(v, w).
  double pair_probability = 0.01;

  void validate() const;
};

/// Average degree rounded to nearest: 2m/n undirected, m/n directed.
std::size_t average_degree_theta(const Graph& g);
std::size_t resolve_theta(const Graph& g, const SelectionConfig& config);

struct SeedSet {
  Method method = Method::Degree;
  /// Seeds in selection order.
  std::vector<NodeId> seeds;
  SelectionConfig config;
  std::size_t candidates_examined = 0;
  /// Candidate list ran out before k seeds were found.
  bool exhausted = false;

  std::size_t size() const noexcept { return seeds.size(); }
};

/// Writes `# method k d_td theta beta p` followed by one original id per
/// line. Fields that do not apply to the method are written as `-`.
void write_seed_file(std::ostream& out, const Graph& g, const SeedSet& set);
/// Reads the ids written by write_seed_file, mapped back to dense ids.
std::vector<NodeId> read_seed_file(std::istream& in, const Graph& g);

}  // namespace infseed
