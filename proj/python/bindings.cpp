#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "recolor/analysis.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/experiment.hpp"
#include "recolor/generators.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/treewidth.hpp"

namespace py = pybind11;
using namespace recolor;

namespace {

using Steps = std::vector<std::pair<Vertex, Color>>;

// Nested reports cross the boundary as JSON text; the Python side parses them.
std::string dump(const json& j) { return j.dump(); }

RecoloringSequence make_sequence(const std::vector<Color>& start, int t, const Steps& steps) {
  RecoloringSequence s{Coloring(start, t), {}};
  for (auto [v, c] : steps) s.steps.push_back({v, c});
  return s;
}

Steps steps_of(const RecoloringSequence& s) {
  Steps out;
  for (auto [v, c] : s.steps) out.emplace_back(v, c);
  return out;
}

EliminationOrdering ordering(const Graph& g, const std::optional<std::vector<Vertex>>& order) {
  return order ? EliminationOrdering(g, *order) : mcs_peo(g);
}

std::string instance_json(const Instance& inst) {
  json j = graph_to_json(inst.graph);
  j["decomposition"] = decomposition_to_json(inst.decomposition);
  j["ordering"] = ordering_to_json(inst.ordering);
  return dump(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Best-choice recoloring, invariant checkers and an exact reconfiguration oracle";

  auto base = py::register_exception<Error>(m, "RecolorError", PyExc_ValueError);
  py::register_exception<StateCapExceeded>(m, "StateCapExceeded", base.ptr());
  py::register_exception<NotChordal>(m, "NotChordal", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges"))
      .def("add_edge", &Graph::add_edge)
      .def_property_readonly("n", &Graph::size)
      .def("__len__", &Graph::size)
      .def("num_edges", &Graph::num_edges)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("load_graph", &load_graph, py::arg("path"));
  m.def("is_proper", [](const Graph& g, const std::vector<Color>& c, int t) { return is_proper(g, Coloring(c, t)); },
        py::arg("g"), py::arg("colors"), py::arg("t"));
  m.def("mcs_peo", [](const Graph& g) { return mcs_peo(g).order(); }, py::arg("g"));
  m.def("degeneracy",
        [](const Graph& g) {
          auto d = degeneracy(g);
          return py::make_tuple(d.d, d.ordering.order());
        },
        py::arg("g"));
  m.def("greedy_color",
        [](const Graph& g, const std::vector<Vertex>& order, int t) {
          return greedy_color(g, EliminationOrdering(g, order), t).colors;
        },
        py::arg("g"), py::arg("order"), py::arg("t"));

  m.def("best_choice_sequence",
        [](const Graph& g, const std::vector<Color>& alpha, const std::vector<Color>& beta, int t,
           const std::optional<std::vector<Vertex>>& order) {
          return steps_of(best_choice_sequence(g, ordering(g, order), Coloring(alpha, t), Coloring(beta, t)));
        },
        py::arg("g"), py::arg("alpha"), py::arg("beta"), py::arg("t"), py::arg("order") = py::none());
  m.def("best_choice_trace",
        [](const Graph& g, const std::vector<Color>& alpha, const std::vector<Color>& beta, int t,
           const std::optional<std::vector<Vertex>>& order) {
          auto s = best_choice_sequence(g, ordering(g, order), Coloring(alpha, t), Coloring(beta, t));
          std::ostringstream out;
          apply_sequence(g, s, &out);
          return out.str();
        },
        py::arg("g"), py::arg("alpha"), py::arg("beta"), py::arg("t"), py::arg("order") = py::none());
  m.def("apply_sequence",
        [](const Graph& g, const std::vector<Color>& start, int t, const Steps& steps) {
          return apply_sequence(g, make_sequence(start, t, steps)).colors;
        },
        py::arg("g"), py::arg("start"), py::arg("t"), py::arg("steps"));
  m.def("_analyze",
        [](const Graph& g, const std::vector<Color>& start, int t, const Steps& steps,
           const std::optional<std::vector<Vertex>>& order, bool naughty, int d) {
          AnalysisOptions opts;
          opts.naughty = naughty;
          opts.d = d;
          return dump(report_to_json(analyze(g, ordering(g, order), make_sequence(start, t, steps), opts)));
        },
        py::arg("g"), py::arg("start"), py::arg("t"), py::arg("steps"), py::arg("order") = py::none(),
        py::arg("naughty") = false, py::arg("d") = -1);
  m.def("recoloring_bound", &recoloring_bound, py::arg("d"));

  m.def("rt_distance",
        [](const Graph& g, int t, const std::vector<Color>& a, const std::vector<Color>& b, std::uint64_t cap) {
          return rt_distance(g, t, Coloring(a, t), Coloring(b, t), cap);
        },
        py::arg("g"), py::arg("t"), py::arg("a"), py::arg("b"), py::arg("state_cap") = kDefaultStateCap);
  m.def("rt_shortest_path",
        [](const Graph& g, int t, const std::vector<Color>& a, const std::vector<Color>& b,
           std::uint64_t cap) -> std::optional<Steps> {
          auto p = rt_shortest_path(g, t, Coloring(a, t), Coloring(b, t), cap);
          if (!p) return std::nullopt;
          return steps_of(*p);
        },
        py::arg("g"), py::arg("t"), py::arg("a"), py::arg("b"), py::arg("state_cap") = kDefaultStateCap);
  m.def("rt_connected", &rt_connected, py::arg("g"), py::arg("t"), py::arg("state_cap") = kDefaultStateCap);
  m.def("rt_diameter", &rt_diameter, py::arg("g"), py::arg("t"), py::arg("state_cap") = kDefaultStateCap);
  m.def("enumerate_colorings",
        [](const Graph& g, int t, std::uint64_t cap) { return enumerate_colorings(g, t, cap); }, py::arg("g"),
        py::arg("t"), py::arg("state_cap") = kDefaultStateCap);

  m.def("_gen_ktree", [](int n, int k, std::uint64_t seed) { return instance_json(gen_ktree(n, k, seed)); });
  m.def("_gen_chordal", [](int n, int d, std::uint64_t seed) { return instance_json(gen_chordal(n, d, seed)); });
  m.def("_gen_partial_ktree", [](int n, int k, double keep, std::uint64_t seed) {
    return instance_json(gen_partial_ktree(n, k, keep, seed));
  });
  m.def("random_coloring",
        [](const Graph& g, int t, std::uint64_t seed, const std::optional<std::vector<Vertex>>& order) {
          return gen_random_coloring(g, order ? EliminationOrdering(g, *order) : degeneracy(g).ordering, t, seed)
              .colors;
        },
        py::arg("g"), py::arg("t"), py::arg("seed"), py::arg("order") = py::none());

  m.def("_merge_by_coloring", [](const Graph& g, const std::string& td, const std::vector<Color>& alpha, int t) {
    auto r = merge_by_coloring(g, decomposition_from_json(json::parse(td)), Coloring(alpha, t));
    json j = graph_to_json(r.graph);
    j["pi"] = r.map.pi;
    j["fibers"] = r.map.fibers;
    j["coloring"] = r.coloring.colors;
    j["decomposition"] = decomposition_to_json(r.decomposition);
    j["peo"] = r.peo.order();
    j["width"] = r.width;
    return dump(j);
  });
  m.def("_pipeline", [](const Graph& g, const std::string& td, const std::vector<Color>& alpha,
                        const std::vector<Color>& beta, int t, bool oracle, std::uint64_t cap) {
    return dump(pipeline_to_json(corollary_pipeline(g, decomposition_from_json(json::parse(td)), Coloring(alpha, t),
                                                    Coloring(beta, t), t, oracle ? Bridge::Oracle : Bridge::None, cap)));
  });

  m.def("_run_experiment", [](const std::string& family, int n_min, int n_max, int d, const std::string& t_rule,
                              int trials, std::uint64_t seed, int threads, bool naughty, bool oracle) {
    ExperimentConfig cfg;
    cfg.family = parse_family(family);
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.d = d;
    cfg.t_rule = PaletteRule::parse(t_rule);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.checks.naughty = naughty;
    cfg.oracle = oracle;
    ExperimentResult res;
    {
      py::gil_scoped_release release;
      res = run_experiment(cfg);
    }
    std::ostringstream csv;
    write_rows_csv(csv, res.rows, false);
    return py::make_tuple(csv.str(), summary_json(cfg, res.summary));
  });
}
