#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "recolor/analysis.hpp"
#include "recolor/generators.hpp"
#include "recolor/oracle.hpp"

namespace recolor {

inline constexpr int kRowsSchemaVersion = 1;

enum class Family { KTree, Chordal, PartialKTree };

Family parse_family(const std::string& name);
std::string family_name(Family f);

/// Palette as an affine function of the degeneracy: t = mul*d + add.
struct PaletteRule {
  int mul = 2;
  int add = 1;

  int operator()(int d) const { return mul * d + add; }
  /// Accepts "2d+1", "d+2", "3d", "7", "2*d+1".
  static PaletteRule parse(const std::string& text);
  std::string str() const;
};

struct ExperimentConfig {
  Family family = Family::KTree;
  int n_min = 10;
  int n_max = 100;
  int d = 2;  // k for k-trees, back-degree cap for chordal graphs
  PaletteRule t_rule;
  int trials = 10;
  std::uint64_t seed = 1;
  double keep = 0.7;         // edge retention for partial k-trees
  bool greedy_beta = false;  // beta = greedy (d+1)-coloring
  AnalysisOptions checks;
  bool run_checks = true;
  bool oracle = false;  // compare lengths with rt_distance when the state space fits
  std::uint64_t state_cap = kDefaultStateCap;
  int threads = 1;
  bool timing = false;  // wall time in rows; off keeps output byte-identical
};

/// Throws InvalidParams unless the configuration can run.
void validate_config(const ExperimentConfig& cfg);

struct ExperimentRow {
  int trial = 0;
  std::uint64_t seed = 0;
  int n = 0;
  int edges = 0;
  int d = 0;  // max back-degree of the ordering used
  int t = 0;
  std::size_t length = 0;
  std::size_t max_count = 0;
  bool valid = false;        // every step proper, ends at beta
  bool checks_ok = true;     // no analysis violations
  bool bound_ok = true;      // max_count <= 2^18 d^7
  std::size_t violations = 0;
  std::map<std::string, std::size_t> violations_by_check;
  std::int64_t tight = 0;
  std::int64_t saved = 0;
  std::int64_t rotating = 0;
  std::int64_t naughty_max = 0;
  std::int64_t obs2_checked = 0;
  long long oracle_distance = -1;  // -1 when not computed
  bool oracle_ok = true;           // length >= distance
  double seconds = 0.0;
  std::string error;

  bool ok() const { return error.empty() && valid && checks_ok && bound_ok && oracle_ok; }
};

struct ExperimentSummary {
  int trials = 0;
  int failed = 0;
  std::size_t violations = 0;
  std::size_t max_count = 0;
  double bound = 0.0;
  double max_length_per_n = 0.0;
  double mean_length_per_n = 0.0;
  double slope = 0.0;  // least squares of length against n
  double intercept = 0.0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  ExperimentSummary summary;
};

/// One trial: instance, two colorings, engine run, checks. Errors are caught
/// into the row.
ExperimentRow run_trial(const ExperimentConfig& cfg, int trial);

/// All trials, on `cfg.threads` workers; rows are ordered by trial index.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool timing);
std::string summary_json(const ExperimentConfig& cfg, const ExperimentSummary& s);

}  // namespace recolor
