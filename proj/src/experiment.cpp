#include "recolor/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "recolor/best_choice.hpp"

namespace recolor {

Family parse_family(const std::string& name) {
  if (name == "ktree") return Family::KTree;
  if (name == "chordal") return Family::Chordal;
  if (name == "partial-ktree") return Family::PartialKTree;
  throw InvalidParams("unknown family '" + name + "' (ktree, chordal, partial-ktree)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::KTree: return "ktree";
    case Family::Chordal: return "chordal";
    case Family::PartialKTree: return "partial-ktree";
  }
  return "?";
}

PaletteRule PaletteRule::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  static const std::regex affine(R"(^(?:(\d*)\*?d)?(?:([+-]?\d+))?$)");
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, affine)) {
    throw InvalidParams("cannot parse palette rule '" + text + "'");
  }
  PaletteRule r{0, 0};
  const bool has_d = s.find('d') != std::string::npos;
  if (has_d) r.mul = m[1].length() ? std::stoi(m[1]) : 1;
  if (m[2].length()) r.add = std::stoi(m[2]);
  return r;
}

std::string PaletteRule::str() const {
  std::string out;
  if (mul != 0) out = (mul == 1 ? "" : std::to_string(mul)) + "d";
  if (add != 0 || out.empty()) out += (add >= 0 && !out.empty() ? "+" : "") + std::to_string(add);
  return out;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw InvalidParams("trials must be at least 1");
  if (cfg.d < 0) throw InvalidParams("d must be non-negative");
  if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw InvalidParams("bad n range");
  if (cfg.family != Family::Chordal && cfg.n_min < cfg.d + 1) {
    throw InvalidParams("k-tree families need n >= k+1");
  }
  if (cfg.t_rule(cfg.d) < std::max(2, cfg.d + 2)) {
    throw InvalidParams("palette rule " + cfg.t_rule.str() + " gives t below d+2 at d=" +
                        std::to_string(cfg.d));
  }
  if (cfg.threads < 1) throw InvalidParams("threads must be at least 1");
}

ExperimentRow run_trial(const ExperimentConfig& cfg, int trial) {
  ExperimentRow row;
  row.trial = trial;
  row.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(trial));
  const int span = cfg.n_max - cfg.n_min;
  row.n = cfg.n_min + (cfg.trials > 1 ? static_cast<int>(static_cast<long long>(span) * trial / (cfg.trials - 1)) : 0);
  const auto started = std::chrono::steady_clock::now();
  try {
    Instance inst;
    switch (cfg.family) {
      case Family::KTree: inst = gen_ktree(row.n, cfg.d, row.seed); break;
      case Family::Chordal: inst = gen_chordal(row.n, cfg.d, row.seed); break;
      case Family::PartialKTree: inst = gen_partial_ktree(row.n, cfg.d, cfg.keep, row.seed); break;
    }
    const Graph& g = inst.graph;
    const EliminationOrdering& ord = inst.ordering;
    row.edges = g.num_edges();
    row.d = ord.max_back_degree();
    row.t = cfg.t_rule(row.d);

    Coloring alpha = gen_random_coloring(g, ord, row.t, derive_seed(row.seed, 2));
    Coloring beta;
    if (cfg.greedy_beta) {
      beta = greedy_color(g, ord, row.d + 1);
      beta.palette = row.t;
    } else {
      beta = gen_random_coloring(g, ord, row.t, derive_seed(row.seed, 3));
    }

    RecoloringSequence s = best_choice_sequence(g, ord, alpha, beta);
    row.length = s.size();
    row.valid = apply_sequence(g, s) == beta;

    if (cfg.run_checks) {
      AnalysisOptions opts = cfg.checks;
      opts.d = row.d;
      AnalysisReport report = analyze(g, ord, s, opts);
      row.max_count = report.max_count;
      row.violations = report.violations.size();
      row.checks_ok = report.ok();
      for (const auto& v : report.violations) ++row.violations_by_check[v.check];
      auto stat = [&](const char* key) {
        auto it = report.statistics.find(key);
        return it == report.statistics.end() ? std::int64_t{0} : it->second;
      };
      row.tight = stat("tight");
      row.saved = stat("saved");
      row.rotating = stat("rotating");
      row.naughty_max = stat("naughty_max_per_clique");
      row.obs2_checked = stat("obs2_checked");
    } else {
      for (auto c : per_vertex_counts(s)) row.max_count = std::max(row.max_count, c);
    }
    row.bound_ok = row.d == 0 ? row.max_count <= 1
                              : static_cast<double>(row.max_count) <= recoloring_bound(row.d);

    if (cfg.oracle && std::pow(static_cast<double>(row.t), row.n) <= static_cast<double>(cfg.state_cap)) {
      auto dist = rt_distance(g, row.t, alpha, beta, cfg.state_cap);
      row.oracle_distance = dist ? static_cast<long long>(*dist) : -2;
      row.oracle_ok = dist && row.length >= *dist;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return row;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentResult res;
  res.rows.resize(cfg.trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.trials; i = next++) res.rows[i] = run_trial(cfg, i);
  };
  const int workers = std::min(cfg.threads, cfg.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ExperimentSummary& sum = res.summary;
  sum.trials = cfg.trials;
  sum.bound = recoloring_bound(std::max(1, cfg.d));
  double sx = 0, sy = 0, sxx = 0, sxy = 0, ratio_total = 0;
  int fitted = 0;
  for (const auto& row : res.rows) {
    if (!row.ok()) ++sum.failed;
    sum.violations += row.violations;
    if (!row.error.empty()) continue;
    sum.max_count = std::max(sum.max_count, row.max_count);
    const double ratio = static_cast<double>(row.length) / row.n;
    sum.max_length_per_n = std::max(sum.max_length_per_n, ratio);
    ratio_total += ratio;
    sx += row.n;
    sy += static_cast<double>(row.length);
    sxx += static_cast<double>(row.n) * row.n;
    sxy += static_cast<double>(row.n) * static_cast<double>(row.length);
    ++fitted;
  }
  if (fitted > 0) {
    sum.mean_length_per_n = ratio_total / fitted;
    const double denom = fitted * sxx - sx * sx;
    if (denom != 0) {
      sum.slope = (fitted * sxy - sx * sy) / denom;
      sum.intercept = (sy - sum.slope * sx) / fitted;
    } else {
      sum.intercept = sy / fitted;
    }
  }
  return res;
}

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool timing) {
  out << "schema_version,trial,seed,n,edges,d,t,length,max_count,valid,checks_ok,bound_ok,violations,"
         "tight,saved,rotating,naughty_max,obs2_checked,oracle_distance,oracle_ok";
  if (timing) out << ",seconds";
  out << ",error\n";
  for (const auto& r : rows) {
    out << kRowsSchemaVersion << ',' << r.trial << ',' << r.seed << ',' << r.n << ',' << r.edges << ','
        << r.d << ',' << r.t << ',' << r.length << ',' << r.max_count << ',' << int(r.valid) << ','
        << int(r.checks_ok) << ',' << int(r.bound_ok) << ',' << r.violations << ',' << r.tight << ','
        << r.saved << ',' << r.rotating << ',' << r.naughty_max << ',' << r.obs2_checked << ','
        << r.oracle_distance << ',' << int(r.oracle_ok);
    if (timing) out << ',' << std::fixed << std::setprecision(6) << r.seconds << std::defaultfloat;
    std::string err = r.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    out << ",\"" << err << "\"\n";
  }
}

std::string summary_json(const ExperimentConfig& cfg, const ExperimentSummary& s) {
  nlohmann::json j = {{"schema_version", kRowsSchemaVersion},
                      {"family", family_name(cfg.family)},
                      {"d", cfg.d},
                      {"t_rule", cfg.t_rule.str()},
                      {"n_min", cfg.n_min},
                      {"n_max", cfg.n_max},
                      {"seed", cfg.seed},
                      {"trials", s.trials},
                      {"failed", s.failed},
                      {"violations", s.violations},
                      {"max_count", s.max_count},
                      {"bound", s.bound},
                      {"max_length_per_n", s.max_length_per_n},
                      {"mean_length_per_n", s.mean_length_per_n},
                      {"slope", s.slope},
                      {"intercept", s.intercept}};
  return j.dump(2);
}

}  // namespace recolor
