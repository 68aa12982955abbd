#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "infseed/error.hpp"
#include "infseed/graph.hpp"

namespace infseed {
namespace {

constexpr std::string_view kWhitespace = " \t\r\v\f";

std::string_view next_token(std::string_view& rest) {
  const auto start = rest.find_first_not_of(kWhitespace);
  if (start == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(start);
  const auto end = std::min(rest.find_first_of(kWhitespace), rest.size());
  auto token = rest.substr(0, end);
  rest.remove_prefix(end);
  return token;
}

std::int64_t parse_label(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(line, "expected integer node id, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, Directedness directedness, LoadSummary* summary) {
  std::unordered_map<std::int64_t, NodeId> dense;
  std::vector<std::int64_t> labels;
  std::vector<Graph::Edge> edges;

  auto intern = [&](std::int64_t label) {
    auto [it, inserted] = dense.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    auto first = next_token(rest);
    if (first.empty() || first.front() == '%' || first.front() == '#') continue;
    auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected two node ids");
    const auto u = parse_label(first, line_no);
    const auto v = parse_label(second, line_no);
    const NodeId a = intern(u);
    const NodeId b = intern(v);
    edges.emplace_back(a, b);
  }
  if (edges.empty()) throw EmptyGraphError("edge list contains no edges");

  LoadSummary local;
  const auto n = static_cast<NodeId>(labels.size());
  auto g = Graph::from_edges(n, edges, directedness, std::move(labels), &local);
  local.lines_read = line_no;
  if (summary) *summary = local;
  return g;
}

Graph load_edge_list(const std::filesystem::path& path, Directedness directedness,
                     LoadSummary* summary) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list " + path.string());
  return load_edge_list(in, directedness, summary);
}

}  // namespace infseed
