#include "infseed/seed_set.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "infseed/error.hpp"

namespace infseed {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 15> kNames{{
    {Method::Degree, "degree"},
    {Method::Katz, "katz"},
    {Method::Closeness, "closeness"},
    {Method::Betweenness, "betweenness"},
    {Method::Eigenvector, "eigenvector"},
    {Method::PageRank, "pagerank"},
    {Method::LeaderRank, "leaderrank"},
    {Method::KShell, "kshell"},
    {Method::DegreeDiscount, "degreediscount"},
    {Method::Greedy, "greedy"},
    {Method::DegreeDistance, "degreedistance"},
    {Method::DegreeDistance2, "degreedistance2"},
    {Method::Fidd, "fidd"},
    {Method::Sidd, "sidd"},
    {Method::Random, "random"},
}};

bool uses_distance_threshold(Method m) {
  return m == Method::DegreeDistance || m == Method::DegreeDistance2 || m == Method::Fidd ||
         m == Method::Sidd;
}

}  // namespace

std::string_view method_name(Method method) {
  for (const auto& [m, name] : kNames)
    if (m == method) return name;
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [m, n] : kNames)
    if (n == name) return m;
  if (name == "dd") return Method::DegreeDistance;
  if (name == "dd2") return Method::DegreeDistance2;
  if (name == "k-shell") return Method::KShell;
  if (name == "dd-discount") return Method::DegreeDiscount;
  return std::nullopt;
}

void SelectionConfig::validate() const {
  if (k < 1) throw DomainError("seed count k must be at least 1");
  if (distance_threshold < 2) throw DomainError("distance threshold must be at least 2");
  if (!(beta >= 0.0)) throw DomainError("beta must be non-negative");
  if (!(pair_probability >= 0.0 && pair_probability <= 1.0))
    throw DomainError("pair probability must lie in [0, 1]");
}

std::size_t average_degree_theta(const Graph& g) {
  if (g.node_count() == 0) return 0;
  const double arcs = g.directed() ? static_cast<double>(g.edge_count())
                                   : 2.0 * static_cast<double>(g.edge_count());
  return static_cast<std::size_t>(std::llround(arcs / g.node_count()));
}

std::size_t resolve_theta(const Graph& g, const SelectionConfig& config) {
  return config.theta ? *config.theta : average_degree_theta(g);
}

void write_seed_file(std::ostream& out, const Graph& g, const SeedSet& set) {
  const bool distance = uses_distance_threshold(set.method);
  const bool gated = set.method == Method::Fidd || set.method == Method::Sidd;
  out << "# " << method_name(set.method) << ' ' << set.config.k << ' ';
  if (distance)
    out << set.config.distance_threshold;
  else
    out << '-';
  out << ' ';
  if (gated) {
    const auto theta = resolve_theta(g, set.config);
    if (theta == kUnboundedTheta)
      out << "inf";
    else
      out << theta;
  } else {
    out << '-';
  }
  out << ' ';
  if (set.method == Method::Sidd)
    out << set.config.beta << ' ' << set.config.pair_probability;
  else
    out << "- -";
  out << '\n';
  for (NodeId v : set.seeds) out << g.original_id(v) << '\n';
}

std::vector<NodeId> read_seed_file(std::istream& in, const Graph& g) {
  std::vector<NodeId> seeds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::int64_t label = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), label);
    if (ec != std::errc{}) throw ParseError(line_no, "expected node id");
    auto v = g.find_original(label);
    if (!v) throw DomainError("seed " + std::to_string(label) + " is not a node of the graph");
    seeds.push_back(*v);
  }
  return seeds;
}

}  // namespace infseed
