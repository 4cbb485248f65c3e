// Command-line front end. Exit codes: 0 ok, 1 check violation, 2 input error,
// 3 state cap exceeded.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "recolor/analysis.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/experiment.hpp"
#include "recolor/generators.hpp"
#include "recolor/io.hpp"
#include "recolor/oracle.hpp"
#include "recolor/treewidth.hpp"

using namespace recolor;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2, kCapExceeded = 3 };

struct Common {
  std::string graph;
  int t = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::uint64_t state_cap = kDefaultStateCap;
};

void add_common(CLI::App* cmd, Common& c, bool needs_graph, bool needs_t) {
  auto* g = cmd->add_option("--graph", c.graph, "graph file (.json with n/adj or n/edges, else text edge list)");
  if (needs_graph) g->required()->check(CLI::ExistingFile);
  auto* t = cmd->add_option("--t", c.t, "palette size");
  if (needs_t) t->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--out", c.out, "output file (stdout when omitted)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--state-cap", c.state_cap, "largest t^n the oracle will explore");
}

// Writes to --out or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InvalidParams("cannot write " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit(const Common& c, const json& j) { Sink(c.out).out() << j.dump(2) << '\n'; }

// A coloring given as a file or inline as "1,2,1".
Coloring coloring_arg(const std::string& text, int t) {
  if (std::filesystem::exists(text)) return load_coloring(text, t);
  std::vector<Color> colors;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      colors.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidParams("bad coloring '" + text + "'");
    }
  }
  return Coloring(colors, t);
}

// Ordering from --order (file or comma list) or by maximum cardinality search.
EliminationOrdering ordering_arg(const Graph& g, const std::string& text) {
  if (text.empty()) return mcs_peo(g);
  if (std::filesystem::exists(text)) return ordering_from_json(g, read_json_file(text));
  return ordering_from_json(g, json::parse("[" + text + "]"));
}

json sequence_summary(const RecoloringSequence& s) {
  auto counts = per_vertex_counts(s);
  std::size_t max_count = 0;
  for (auto c : counts) max_count = std::max(max_count, c);
  json j = sequence_to_json(s);
  j["schema_version"] = kSchemaVersion;
  j["length"] = s.size();
  j["final"] = final_coloring(s).colors;
  j["per_vertex_counts"] = counts;
  j["max_count"] = max_count;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best-choice recoloring of degenerate chordal graphs, checkers and a reconfiguration oracle"};
  app.require_subcommand(1);
  Common c;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance (graph, decomposition, ordering)");
  add_common(gen, c, false, false);
  std::string family = "ktree";
  int gen_n = 10, gen_k = 2;
  double keep = 0.7;
  gen->add_option("--family", family)->check(CLI::IsMember({"ktree", "chordal", "partial-ktree"}));
  gen->add_option("--n", gen_n, "vertices")->required();
  gen->add_option("--k,--d", gen_k, "k for k-trees, degeneracy cap for chordal")->required();
  gen->add_option("--keep", keep, "edge keep probability for partial k-trees");
  bool with_coloring = false;
  gen->add_flag("--coloring", with_coloring, "also emit a random proper --t coloring");

  // peo
  auto* peo = app.add_subcommand("peo", "certified perfect elimination ordering");
  add_common(peo, c, true, false);

  // recolor
  auto* rec = app.add_subcommand("recolor", "best-choice sequence from --from to --to");
  add_common(rec, c, true, true);
  std::string from, to, order;
  bool trace = false;
  rec->add_option("--from", from, "start coloring (file or comma list); random when omitted");
  rec->add_option("--to", to, "target coloring (file or comma list); random when omitted");
  rec->add_option("--order", order, "elimination ordering (file or comma list); MCS when omitted");
  rec->add_flag("--trace", trace, "print every step with the coloring after it to stderr");

  // analyze
  auto* ana = app.add_subcommand("analyze", "run the invariant checkers on a sequence");
  add_common(ana, c, true, false);
  std::string seq_path;
  AnalysisOptions opts;
  ana->add_option("--sequence", seq_path, "sequence JSON (palette, start, steps)")->required()->check(CLI::ExistingFile);
  ana->add_option("--order", order, "elimination ordering; MCS when omitted");
  ana->add_option("--d", opts.d, "degeneracy; max back-degree of the ordering when omitted");
  ana->add_flag("--naughty", opts.naughty, "also count naughty recolorings per (d-1)-clique");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact queries on the reconfiguration graph");
  orc->require_subcommand(1);
  auto* dist = orc->add_subcommand("distance", "shortest recoloring distance with a witness path");
  auto* conn = orc->add_subcommand("connected", "is every pair of colorings connected");
  auto* diam = orc->add_subcommand("diameter", "diameter, or null when disconnected");
  for (auto* q : {dist, conn, diam}) add_common(q, c, true, true);
  dist->add_option("--from", from)->required();
  dist->add_option("--to", to)->required();

  // pipeline
  auto* pip = app.add_subcommand("pipeline", "recolor a bounded-treewidth graph through merged chordal graphs");
  add_common(pip, c, true, true);
  std::string td_path, bridge = "oracle";
  pip->add_option("--decomposition", td_path, "tree decomposition JSON; the graph file's own when omitted");
  pip->add_option("--from", from);
  pip->add_option("--to", to);
  pip->add_option("--bridge", bridge)->check(CLI::IsMember({"oracle", "none"}));

  // bench
  auto* bench = app.add_subcommand("bench", "batch experiment; rows as csv, summary as json");
  add_common(bench, c, false, false);
  ExperimentConfig cfg;
  std::string t_rule = "2d+1", summary_path;
  bench->add_option("--family", family)->check(CLI::IsMember({"ktree", "chordal", "partial-ktree"}));
  bench->add_option("--n-min", cfg.n_min);
  bench->add_option("--n-max", cfg.n_max);
  bench->add_option("--d", cfg.d);
  bench->add_option("--t-rule", t_rule, "palette as a function of d, e.g. 2d+1 or d+2");
  bench->add_option("--trials", cfg.trials);
  bench->add_option("--keep", cfg.keep);
  bench->add_option("--threads", cfg.threads);
  bench->add_flag("--greedy-beta", cfg.greedy_beta, "target is a greedy (d+1)-coloring");
  bench->add_flag("--naughty", cfg.checks.naughty);
  bench->add_flag("--oracle", cfg.oracle, "compare lengths against the BFS distance when t^n fits the cap");
  bench->add_flag("--timing", cfg.timing, "add a seconds column (breaks byte-identical output)");
  bench->add_option("--summary", summary_path, "also write the json summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) {
      Instance inst = family == "ktree"    ? gen_ktree(gen_n, gen_k, c.seed)
                      : family == "chordal" ? gen_chordal(gen_n, gen_k, c.seed)
                                            : gen_partial_ktree(gen_n, gen_k, keep, c.seed);
      if (c.format == "csv") {
        Sink sink(c.out);
        write_graph_text(sink.out(), inst.graph);
        return kOk;
      }
      json j = graph_to_json(inst.graph);
      j["schema_version"] = kSchemaVersion;
      j["decomposition"] = decomposition_to_json(inst.decomposition);
      j["ordering"] = ordering_to_json(inst.ordering);
      if (with_coloring) {
        const int t = c.t > 0 ? c.t : 2 * inst.ordering.max_back_degree() + 1;
        j["coloring"] = coloring_to_json(gen_random_coloring(inst.graph, inst.ordering, t, derive_seed(c.seed, 2)));
      }
      emit(c, j);
      return kOk;
    }

    const Graph g = c.graph.empty() ? Graph(0) : load_graph(c.graph);

    if (*peo) {
      try {
        auto ord = mcs_peo(g);
        json j = ordering_to_json(ord);
        j["chordal"] = true;
        j["degeneracy"] = degeneracy(g).d;
        emit(c, j);
        return kOk;
      } catch (const NotChordal& e) {
        emit(c, {{"chordal", false}, {"vertex", e.vertex}, {"nonadjacent_pair", {e.a, e.b}}});
        return kViolation;
      }
    }

    if (*rec) {
      auto ord = ordering_arg(g, order);
      auto alpha = from.empty() ? gen_random_coloring(g, ord, c.t, derive_seed(c.seed, 2)) : coloring_arg(from, c.t);
      auto beta = to.empty() ? gen_random_coloring(g, ord, c.t, derive_seed(c.seed, 3)) : coloring_arg(to, c.t);
      EngineStats stats;
      auto s = best_choice_sequence(g, ord, alpha, beta, &stats);
      const bool reached = apply_sequence(g, s, trace ? &std::cerr : nullptr) == beta;
      json j = sequence_summary(s);
      j["valid"] = reached;
      j["rules"] = {{"target", stats.by_target}, {"unused", stats.by_unused}, {"latest", stats.by_latest},
                    {"closing", stats.closing_steps}};
      emit(c, j);
      return reached ? kOk : kViolation;
    }

    if (*ana) {
      auto s = sequence_from_json(read_json_file(seq_path));
      auto ord = ordering_arg(g, order);
      apply_sequence(g, s);  // rejects invalid sequences before the checkers run
      auto report = analyze(g, ord, s, opts);
      Sink sink(c.out);
      if (c.format == "csv") {
        write_report_csv(sink.out(), report);
      } else {
        sink.out() << report_to_json(report).dump(2) << '\n';
      }
      return report.ok() ? kOk : kViolation;
    }

    if (*dist) {
      auto a = coloring_arg(from, c.t), b = coloring_arg(to, c.t);
      auto path = rt_shortest_path(g, c.t, a, b, c.state_cap);
      json j{{"schema_version", kSchemaVersion}, {"query", "distance"}, {"t", c.t}};
      j["distance"] = path ? json(path->size()) : json(nullptr);
      j["reachable"] = path.has_value();
      j["witness"] = path ? sequence_to_json(*path) : json(nullptr);
      emit(c, j);
      return kOk;
    }
    if (*conn) {
      auto mix = rt_components(g, c.t, c.state_cap);
      emit(c, {{"schema_version", kSchemaVersion}, {"query", "connected"}, {"t", c.t},
               {"connected", mix.connected()}, {"states", mix.states}, {"components", mix.components},
               {"frozen", mix.frozen}});
      return kOk;
    }
    if (*diam) {
      auto d = rt_diameter(g, c.t, c.state_cap);
      emit(c, {{"schema_version", kSchemaVersion}, {"query", "diameter"}, {"t", c.t},
               {"diameter", d ? json(*d) : json("Infinite")}});
      return kOk;
    }

    if (*pip) {
      TreeDecomposition td = decomposition_from_json(
          td_path.empty() ? read_json_file(c.graph).at("decomposition") : read_json_file(td_path));
      validate_decomposition(g, td);
      auto ord = degeneracy(g).ordering;
      auto alpha = from.empty() ? gen_random_coloring(g, ord, c.t, derive_seed(c.seed, 2)) : coloring_arg(from, c.t);
      auto beta = to.empty() ? gen_random_coloring(g, ord, c.t, derive_seed(c.seed, 3)) : coloring_arg(to, c.t);
      auto p = corollary_pipeline(g, td, alpha, beta, c.t, bridge == "oracle" ? Bridge::Oracle : Bridge::None,
                                  c.state_cap);
      bool ok = true;
      if (p.composed) ok = apply_sequence(g, *p.composed) == beta;
      emit(c, pipeline_to_json(p));
      return ok ? kOk : kViolation;
    }

    if (*bench) {
      cfg.family = parse_family(family);
      cfg.t_rule = PaletteRule::parse(c.t > 0 ? std::to_string(c.t) : t_rule);
      cfg.seed = c.seed;
      cfg.state_cap = c.state_cap;
      auto res = run_experiment(cfg);
      Sink sink(c.out);
      if (c.format == "csv") {
        write_rows_csv(sink.out(), res.rows, cfg.timing);
      } else {
        sink.out() << summary_json(cfg, res.summary) << '\n';
      }
      if (!summary_path.empty()) Sink(summary_path).out() << summary_json(cfg, res.summary) << '\n';
      return res.summary.failed == 0 ? kOk : kViolation;
    }
  } catch (const StateCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
