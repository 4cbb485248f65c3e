#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

// Detectors for the combinatorial structure of best-choice sequences.
//
// Functions working on a neighborhood restriction (tight, saved, naughty)
// restrict their input first and report indices inside that restriction, so
// passing an already restricted sequence gives identical results.

namespace recolor {

/// Steps of `s` whose vertex lies in `x`, in order. The start coloring is kept
/// whole so that colors of vertices outside `x` remain available as context.
RecoloringSequence restrict_sequence(const RecoloringSequence& s, std::span<const Vertex> x);

/// Number of (possibly overlapping) windows of `s` whose vertices spell `pattern`.
std::size_t count_pattern(const RecoloringSequence& s, std::span<const Vertex> pattern);

/// Vertex whose recoloring at step i+1 takes the color step i's vertex had
/// just before step i, when the two are adjacent. Throws std::out_of_range.
std::optional<Vertex> caused_by(const Graph& g, const RecoloringSequence& s, std::size_t i);

/// N^-[v] as a sorted vertex list.
std::vector<Vertex> closed_back_neighborhood(const EliminationOrdering& ord, Vertex v);

/// Recolorings of v in S|N^-[v] followed by exactly |N^-(v)| steps before the
/// next recoloring of v. Indices are positions in S|N^-[v].
std::vector<std::size_t> tight_recolorings(const RecoloringSequence& s,
                                           const EliminationOrdering& ord, Vertex v);

/// Saved positions of S|N^-[v] for v, with window length |N^-(v)|.
std::vector<std::size_t> saved_steps(const RecoloringSequence& s, const EliminationOrdering& ord,
                                     Vertex v);

struct SaveInequality {
  std::size_t count = 0;      // |S|v|
  std::size_t back_sum = 0;   // sum of |S|u| over u in N^-(v)
  std::size_t saved = 0;      // r
  int d = 0;                  // |N^-(v)|
  std::int64_t bound = 0;     // 1 + ceil((back_sum - saved) / d), or 1 when d = 0
  bool holds() const { return static_cast<std::int64_t>(count) <= bound; }
};

SaveInequality check_save_inequality(const RecoloringSequence& s, const EliminationOrdering& ord,
                                     Vertex v);

struct Violation {
  std::string check;
  Vertex vertex = -1;
  std::vector<std::size_t> steps;  // indices into the analysed sequence

  bool operator==(const Violation&) const = default;
};

/// For every v: no two consecutive recolorings of v in S|N^-[v], and two
/// recolorings of v separated by fewer than |N^-(v)| steps only when the
/// second is the last recoloring of v.
std::vector<Violation> check_observation1(const RecoloringSequence& s,
                                          const EliminationOrdering& ord);

struct Observation2Result {
  std::size_t checked = 0;
  /// Coverage failures of the literal color multiset, kept for reference.
  std::size_t literal_mismatches = 0;
  std::vector<Violation> violations;
};

/// Color coverage around tight recolorings of v, for palettes of 2|N^-(v)|+1.
///
/// For a tight recoloring of v taking c_0 -> x, with c_1..c_d the colors of
/// N^-(v) before it and c'_1..c'_d the new colors of the d gap steps, checks
/// c'_1 = c_0 and {c_0, c_1..c_d, x, c'_2..c'_d} = {1..2d+1}. Tight
/// recolorings whose follower is the last step of S|N^-[v] are exempt.
Observation2Result check_observation2(const RecoloringSequence& s, const EliminationOrdering& ord,
                                      Vertex v);

/// Global indices of the rotating recolorings of x: the j-th recoloring is
/// rotating when x returns to its pre-j color at the (j+2)-th.
std::vector<std::size_t> rotating_recolorings(const RecoloringSequence& s, Vertex x);

struct NaughtyWindows {
  int color_window;   // lookahead for free colors, default 3d+4
  int causal_window;  // span without causation, default 3d-4
  static NaughtyWindows defaults(int d) { return {3 * d + 4, 3 * d - 4}; }
};

/// Naughty positions of S|X for a (d-1)-clique X. Throws InvalidParams when X
/// is not a clique of g or does not have d-1 vertices.
std::vector<std::size_t> naughty_recolorings(const RecoloringSequence& s, const Graph& g,
                                             std::span<const Vertex> clique, int d,
                                             std::optional<NaughtyWindows> windows = {});

std::vector<std::size_t> per_vertex_counts(const RecoloringSequence& s);

/// 2^18 d^7, the per-vertex recoloring bound for palettes of 2d+1.
double recoloring_bound(int d);

/// Largest naughty count per (d-1)-clique compatible with the bound c(d).
double naughty_threshold(int d);

struct AnalysisOptions {
  bool observation1 = true;
  bool save_inequality = true;
  bool observation2 = true;  // only applied when the palette is 2|N^-(v)|+1
  bool causation = true;
  bool rotating = true;
  bool naughty = false;
  bool bound = true;  // per-vertex counts against c(d) for palettes of 2d+1
  int d = -1;         // degeneracy; max back-degree of the ordering when negative
};

struct VertexStats {
  Vertex vertex = 0;
  std::size_t count = 0;
  int back_degree = 0;
  std::size_t tight = 0;
  std::size_t saved = 0;
  std::size_t rotating = 0;
  std::int64_t save_bound = 0;
};

struct AnalysisReport {
  std::vector<std::size_t> per_vertex_counts;
  std::size_t max_count = 0;
  std::map<std::size_t, std::size_t> histogram;  // count -> number of vertices
  std::vector<VertexStats> vertices;
  std::vector<Violation> violations;
  std::map<std::string, std::int64_t> statistics;

  bool ok() const { return violations.empty(); }
};

AnalysisReport analyze(const Graph& g, const EliminationOrdering& ord, const RecoloringSequence& s,
                       const AnalysisOptions& options = {});

}  // namespace recolor
