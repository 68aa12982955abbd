#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <string>

#include "infseed/error.hpp"
#include "infseed/experiment.hpp"
#include "infseed/generators.hpp"
#include "infseed/metrics.hpp"
#include "infseed/parallel.hpp"
#include "infseed/seed_select.hpp"

namespace py = pybind11;
using namespace infseed;

namespace {

Method to_method(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw py::value_error("unknown method: " + name);
  return *m;
}

// None means the average degree, inf means no common-neighbor limit.
std::optional<std::size_t> to_theta(const py::object& theta) {
  if (theta.is_none()) return std::nullopt;
  const double t = theta.cast<double>();
  if (std::isinf(t) && t > 0) return kUnboundedTheta;
  if (t < 0 || t != std::floor(t)) throw py::value_error("theta must be a non-negative integer");
  return static_cast<std::size_t>(t);
}

ExperimentConfig make_config(std::uint32_t dtd, const py::object& theta, double beta, double p,
                             std::size_t reps, std::uint64_t seed, std::size_t greedy_reps,
                             double katz_beta) {
  ExperimentConfig c;
  c.selection.distance_threshold = dtd;
  c.selection.theta = to_theta(theta);
  c.selection.beta = beta;
  c.selection.pair_probability = p;
  c.ic = {.p = p, .replications = reps, .master_seed = seed};
  c.greedy_replications = greedy_reps;
  c.degree_discount.p = p;
  c.katz.beta = katz_beta;
  c.master_seed = seed;
  return c;
}

py::dict row_dict(const ReportRow& row, const std::vector<Method>& methods) {
  py::dict d;
  d["method"] = std::string(method_name(row.method));
  d["k"] = row.k;
  d["error"] = row.error;
  d["seeds_found"] = row.seeds_found;
  d["exhausted"] = row.exhausted;
  d["spread_mean"] = row.spread ? py::cast(row.spread->mean) : py::none();
  d["spread_stddev"] = row.spread ? py::cast(row.spread->stddev) : py::none();
  d["selection_ms"] = row.selection_ms;
  d["simulation_ms"] = row.simulation_ms;
  d["cov_percent"] = row.cov_percent;
  d["unique_influenced_percent"] = row.unique_influenced_percent;
  py::dict com;
  for (std::size_t i = 0; i < row.com.size(); ++i)
    com[py::str(std::string(method_name(methods[i])))] = row.com[i];
  d["com"] = com;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seed selection, centrality and independent-cascade simulation";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EmptyGraphError>(m, "EmptyGraphError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](NodeId n, const std::vector<Graph::Edge>& edges, bool directed) {
            return Graph::from_edges(n, edges,
                                     directed ? Directedness::Directed : Directedness::Undirected);
          },
          py::arg("node_count"), py::arg("edges"), py::arg("directed") = false)
      .def_static(
          "load",
          [](const std::filesystem::path& path, bool directed) {
            return load_edge_list(path, directed ? Directedness::Directed : Directedness::Undirected);
          },
          py::arg("path"), py::arg("directed") = false)
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("directed", &Graph::directed)
      .def("degree", [](const Graph& g, NodeId v) { g.check_node(v); return degree(g, v); })
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             g.check_node(v);
             const auto row = g.out_neighbors(v);
             return std::vector<NodeId>(row.begin(), row.end());
           })
      .def("original_id", [](const Graph& g, NodeId v) { g.check_node(v); return g.original_id(v); })
      .def("find_original", &Graph::find_original)
      .def("__len__", &Graph::node_count)
      .def("__repr__", [](const Graph& g) {
        return "<Graph nodes=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edge_count()) + (g.directed() ? " directed>" : ">");
      });

  py::class_<SeedSet>(m, "SeedSet")
      .def_property_readonly("method", [](const SeedSet& s) { return std::string(method_name(s.method)); })
      .def_readonly("seeds", &SeedSet::seeds)
      .def_readonly("exhausted", &SeedSet::exhausted)
      .def_readonly("candidates_examined", &SeedSet::candidates_examined)
      .def("__len__", &SeedSet::size);

  py::class_<SpreadEstimate>(m, "SpreadEstimate")
      .def_readonly("mean", &SpreadEstimate::mean)
      .def_readonly("stddev", &SpreadEstimate::stddev)
      .def_readonly("replications", &SpreadEstimate::replications)
      .def_property_readonly("standard_error", &SpreadEstimate::standard_error);

  py::class_<CoverageReport>(m, "CoverageReport")
      .def_readonly("total", &CoverageReport::total)
      .def_readonly("unique", &CoverageReport::unique)
      .def_readonly("cov_percent", &CoverageReport::cov_percent)
      .def_readonly("degenerate", &CoverageReport::degenerate);

  m.def(
      "scores",
      [](const Graph& g, const std::string& method, double katz_beta) {
        ExperimentConfig c;
        c.katz.beta = katz_beta;
        return compute_scores(g, to_method(method), c).scores;
      },
      py::arg("graph"), py::arg("method"), py::arg("katz_beta") = 0.1,
      "Per-node scores of a centrality measure, indexed by dense node id.");

  m.def(
      "select",
      [](const Graph& g, const std::string& method, std::size_t k, std::uint32_t dtd,
         const py::object& theta, double beta, double p, std::uint64_t seed,
         std::size_t greedy_reps, double katz_beta) {
        const auto c = make_config(dtd, theta, beta, p, 10000, seed, greedy_reps, katz_beta);
        const Method m = to_method(method);
        py::gil_scoped_release release;
        return select_seeds(g, m, k, c);
      },
      py::arg("graph"), py::arg("method"), py::arg("k"), py::arg("dtd") = 2,
      py::arg("theta") = py::none(), py::arg("beta") = 0.01, py::arg("p") = 0.01,
      py::arg("seed") = 1, py::arg("greedy_reps") = 200, py::arg("katz_beta") = 0.1);

  m.def(
      "estimate_spread",
      [](const Graph& g, const std::vector<NodeId>& seeds, double p, std::size_t reps,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        return estimate_spread(g, seeds, {.p = p, .replications = reps, .master_seed = seed});
      },
      py::arg("graph"), py::arg("seeds"), py::arg("p") = 0.01, py::arg("reps") = 10000,
      py::arg("seed") = 1);

  m.def(
      "influence_score",
      [](const Graph& g, NodeId v, NodeId s, double p) {
        g.check_node(v);
        g.check_node(s);
        return influence_score(g, v, s, InfluenceModel{p});
      },
      py::arg("graph"), py::arg("v"), py::arg("candidate"), py::arg("p") = 0.01);

  m.def(
      "com_percent",
      [](const std::vector<NodeId>& a, const std::vector<NodeId>& b, std::size_t k) {
        return com_overlap(a, b, k).com_percent;
      },
      py::arg("a"), py::arg("b"), py::arg("k"));
  m.def(
      "coverage",
      [](const Graph& g, const std::vector<NodeId>& seeds, std::size_t k) {
        return cn12_coverage(g, seeds, k);
      },
      py::arg("graph"), py::arg("seeds"), py::arg("k"));
  m.def(
      "unique_influenced_percent",
      [](const Graph& g, const std::vector<NodeId>& seeds) { return unique_influenced_percent(g, seeds); },
      py::arg("graph"), py::arg("seeds"));
  m.def(
      "pearson",
      [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); },
      py::arg("x"), py::arg("y"));

  m.def(
      "run_experiment",
      [](const std::filesystem::path& dataset, const std::vector<std::string>& methods,
         const std::vector<std::size_t>& k, const std::filesystem::path& out, bool directed,
         std::uint32_t dtd, const py::object& theta, double beta, double p, std::size_t reps,
         std::uint64_t seed, std::size_t greedy_reps) {
        auto c = make_config(dtd, theta, beta, p, reps, seed, greedy_reps, 0.1);
        c.dataset = dataset;
        c.directedness = directed ? Directedness::Directed : Directedness::Undirected;
        for (const auto& name : methods) c.methods.push_back(to_method(name));
        c.k_values = k;
        c.output_dir = out;
        ExperimentReport report;
        {
          py::gil_scoped_release release;
          report = run_experiment(c);
        }
        py::list rows;
        for (const auto& row : report.rows) rows.append(row_dict(row, report.methods));
        return rows;
      },
      py::arg("dataset"), py::arg("methods"), py::arg("k"), py::arg("out"),
      py::arg("directed") = false, py::arg("dtd") = 2, py::arg("theta") = py::none(),
      py::arg("beta") = 0.01, py::arg("p") = 0.01, py::arg("reps") = 10000, py::arg("seed") = 1,
      py::arg("greedy_reps") = 200,
      "Runs a campaign, writes report.csv and friends under `out`, returns the rows.");

  m.def(
      "barabasi_albert",
      [](NodeId n, NodeId m_edges, std::uint64_t seed) { return barabasi_albert(n, m_edges, seed); },
      py::arg("node_count"), py::arg("edges_per_node"), py::arg("seed") = 1);
  m.def(
      "collaboration_graph",
      [](NodeId authors, double mean_extra, double q, double pref, std::uint64_t seed) {
        return collaboration_graph({authors, mean_extra, q, pref}, seed);
      },
      py::arg("authors"), py::arg("mean_extra_authors") = 1.0,
      py::arg("new_author_probability") = 0.3, py::arg("preferential_share") = 0.5,
      py::arg("seed") = 1);

  m.def("set_thread_count", &set_thread_count, py::arg("n"));
  m.def("thread_count", &thread_count);
}
