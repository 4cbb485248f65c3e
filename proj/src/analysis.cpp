#include "recolor/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace recolor {

namespace {

// A restriction given by the global indices of its steps, plus pre-colors.
struct View {
  std::vector<std::size_t> global;
  std::vector<RecoloringStep> steps;
  std::vector<Color> pre;

  std::size_t size() const { return steps.size(); }
};

View make_view(const RecoloringSequence& s, std::vector<std::size_t> global) {
  View view;
  view.global = std::move(global);
  view.steps.reserve(view.global.size());
  view.pre.reserve(view.global.size());
  // Pre-colors of a vertex depend only on its own steps, so replaying the
  // restriction alone is enough.
  std::vector<std::pair<Vertex, Color>> local;
  for (std::size_t gi : view.global) {
    auto step = s.steps[gi];
    auto it = std::find_if(local.begin(), local.end(),
                           [&](const auto& e) { return e.first == step.vertex; });
    if (it == local.end()) {
      local.emplace_back(step.vertex, s.start[step.vertex]);
      it = local.end() - 1;
    }
    view.steps.push_back(step);
    view.pre.push_back(it->second);
    it->second = step.new_color;
  }
  return view;
}

View make_view(const RecoloringSequence& s, std::span<const Vertex> x) {
  std::vector<char> member(s.start.size(), 0);
  for (Vertex v : x) {
    if (v >= 0 && v < s.start.size()) member[v] = 1;
  }
  std::vector<std::size_t> global;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (member[s.steps[i].vertex]) global.push_back(i);
  }
  return make_view(s, std::move(global));
}

// Positions of v inside the view.
std::vector<std::size_t> positions_of(const View& view, Vertex v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (view.steps[i].vertex == v) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> tight_in_view(const View& view, Vertex v, int d) {
  auto pos = positions_of(view, v);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
    if (pos[k + 1] - pos[k] - 1 == static_cast<std::size_t>(d)) out.push_back(pos[k]);
  }
  return out;
}

std::vector<std::size_t> saved_in_view(const View& view, Vertex v, int d) {
  const std::size_t m = view.size();
  // v_before[i] = recolorings of v among positions < i.
  std::vector<std::size_t> v_before(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    v_before[i + 1] = v_before[i] + (view.steps[i].vertex == v ? 1 : 0);
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (view.steps[i].vertex == v) continue;
    const bool none_before = v_before[i] == 0;
    const bool none_after = v_before[m] == v_before[i + 1];
    const std::size_t lo = i >= static_cast<std::size_t>(d) ? i - d : 0;
    const bool idle_window = v_before[i] == v_before[lo];
    if (none_before || none_after || idle_window) out.push_back(i);
  }
  return out;
}

bool caused_in_view(const Graph& g, const View& view, std::size_t i) {
  if (i + 1 >= view.size()) return false;
  const auto& next = view.steps[i + 1];
  return next.vertex != view.steps[i].vertex && g.has_edge(next.vertex, view.steps[i].vertex) &&
         next.new_color == view.pre[i];
}

SaveInequality save_inequality_from(const std::vector<std::size_t>& counts,
                                    const EliminationOrdering& ord, Vertex v, std::size_t saved) {
  SaveInequality out;
  out.count = counts[v];
  out.d = static_cast<int>(ord.back_neighbors(v).size());
  for (Vertex u : ord.back_neighbors(v)) out.back_sum += counts[u];
  out.saved = saved;
  if (out.d == 0) {
    out.bound = 1;
  } else {
    auto excess = static_cast<std::int64_t>(out.back_sum) - static_cast<std::int64_t>(saved);
    out.bound = 1 + (excess + out.d - 1) / out.d;
  }
  return out;
}

std::vector<Violation> observation1_in_view(const View& view, Vertex v, int d) {
  std::vector<Violation> out;
  auto pos = positions_of(view, v);
  for (std::size_t k = 0; k + 1 < pos.size(); ++k) {
    const std::size_t gap = pos[k + 1] - pos[k] - 1;
    const bool second_is_last = k + 2 == pos.size();
    if (gap == 0) {
      out.push_back({"observation1_vv", v, {view.global[pos[k]], view.global[pos[k + 1]]}});
    } else if (gap < static_cast<std::size_t>(d) && !second_is_last) {
      out.push_back({"observation1_short_gap", v, {view.global[pos[k]], view.global[pos[k + 1]]}});
    }
  }
  return out;
}

Observation2Result observation2_in_view(const View& view, const EliminationOrdering& ord,
                                        const Coloring& start, Vertex v) {
  Observation2Result res;
  const auto& back = ord.back_neighbors(v);
  const int d = static_cast<int>(back.size());
  if (d == 0) return res;
  const int t = 2 * d + 1;

  // Colors of N^-[v] replayed along the view.
  std::vector<Vertex> nb(back.begin(), back.end());
  nb.push_back(v);
  std::vector<Color> cur;
  for (Vertex w : nb) cur.push_back(start[w]);
  auto slot = [&](Vertex w) { return std::find(nb.begin(), nb.end(), w) - nb.begin(); };

  auto tight = tight_in_view(view, v, d);
  std::size_t next_tight = 0;
  for (std::size_t i = 0; i < view.size(); ++i) {
    if (next_tight < tight.size() && tight[next_tight] == i) {
      ++next_tight;
      const std::size_t follower = i + d + 1;
      if (follower + 1 == view.size()) continue;  // follower closes the restriction
      ++res.checked;
      const Color c0 = cur[slot(v)];
      const Color x = view.steps[i].new_color;
      std::vector<Color> literal;
      for (Color c : cur) literal.push_back(c);
      for (int k = 1; k <= d; ++k) literal.push_back(view.steps[i + k].new_color);

      std::vector<Color> corrected(cur.begin(), cur.end());
      corrected.push_back(x);
      for (int k = 2; k <= d; ++k) corrected.push_back(view.steps[i + k].new_color);

      auto covers = [t](std::vector<Color> colors) {
        std::sort(colors.begin(), colors.end());
        colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
        return static_cast<int>(colors.size()) == t && colors.front() == 1 && colors.back() == t;
      };
      if (!covers(literal)) ++res.literal_mismatches;
      const bool trigger_takes_old = view.steps[i + 1].new_color == c0;
      if (!trigger_takes_old || !covers(corrected)) {
        res.violations.push_back(
            {"observation2_coverage", v, {view.global[i], view.global[follower]}});
      }
    }
    cur[slot(view.steps[i].vertex)] = view.steps[i].new_color;
  }
  return res;
}

// `cur` holds the colors of `members` before the first step of the view.
std::vector<std::size_t> naughty_in_view(const View& view, const std::vector<Vertex>& members,
                                         std::vector<Color> cur, int palette, NaughtyWindows w) {
  const std::size_t m = view.size();
  const std::size_t reach = static_cast<std::size_t>(std::max(0, w.color_window));
  const std::size_t span = static_cast<std::size_t>(std::max(0, w.causal_window));
  std::vector<std::size_t> out;
  std::vector<char> used(palette + 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(used.begin(), used.end(), 0);
    for (Color c : cur) used[c] = 1;
    for (std::size_t j = i + 1; j < m && j <= i + reach; ++j) used[view.steps[j].new_color] = 1;
    int free = 0;
    for (Color c = 1; c <= palette; ++c) free += used[c] ? 0 : 1;

    // Inside the restriction, s'_j is caused by s'_{j+1} when the latter
    // takes the color s'_j's vertex had before s'_j.
    bool quiet = true;
    for (std::size_t j = i + 1; j + 1 < m && j <= i + span && quiet; ++j) {
      const auto& next = view.steps[j + 1];
      quiet = next.vertex == view.steps[j].vertex || next.new_color != view.pre[j];
    }
    if (free >= 3 && quiet) out.push_back(i);

    auto k = std::find(members.begin(), members.end(), view.steps[i].vertex) - members.begin();
    cur[k] = view.steps[i].new_color;
  }
  return out;
}

}  // namespace

RecoloringSequence restrict_sequence(const RecoloringSequence& s, std::span<const Vertex> x) {
  View view = make_view(s, x);
  return {s.start, std::move(view.steps)};
}

std::size_t count_pattern(const RecoloringSequence& s, std::span<const Vertex> pattern) {
  if (pattern.empty() || pattern.size() > s.steps.size()) return 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i + pattern.size() <= s.steps.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size() && match; ++j) {
      match = s.steps[i + j].vertex == pattern[j];
    }
    hits += match ? 1 : 0;
  }
  return hits;
}

std::optional<Vertex> caused_by(const Graph& g, const RecoloringSequence& s, std::size_t i) {
  if (i >= s.steps.size()) {
    throw std::out_of_range("step " + std::to_string(i) + " out of range");
  }
  if (i + 1 == s.steps.size()) return std::nullopt;
  const Vertex u = s.steps[i].vertex;
  Color pre = s.start[u];
  for (std::size_t k = 0; k < i; ++k) {
    if (s.steps[k].vertex == u) pre = s.steps[k].new_color;
  }
  const auto& next = s.steps[i + 1];
  if (next.vertex != u && g.has_edge(u, next.vertex) && next.new_color == pre) return next.vertex;
  return std::nullopt;
}

std::vector<Vertex> closed_back_neighborhood(const EliminationOrdering& ord, Vertex v) {
  std::vector<Vertex> out = ord.back_neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::size_t> tight_recolorings(const RecoloringSequence& s,
                                           const EliminationOrdering& ord, Vertex v) {
  auto nb = closed_back_neighborhood(ord, v);
  return tight_in_view(make_view(s, nb), v, static_cast<int>(ord.back_neighbors(v).size()));
}

std::vector<std::size_t> saved_steps(const RecoloringSequence& s, const EliminationOrdering& ord,
                                     Vertex v) {
  auto nb = closed_back_neighborhood(ord, v);
  return saved_in_view(make_view(s, nb), v, static_cast<int>(ord.back_neighbors(v).size()));
}

SaveInequality check_save_inequality(const RecoloringSequence& s, const EliminationOrdering& ord,
                                     Vertex v) {
  auto counts = per_vertex_counts(s);
  counts.resize(std::max<std::size_t>(counts.size(), ord.size()), 0);
  return save_inequality_from(counts, ord, v, saved_steps(s, ord, v).size());
}

std::vector<Violation> check_observation1(const RecoloringSequence& s,
                                          const EliminationOrdering& ord) {
  std::vector<Violation> out;
  for (Vertex v : ord.order()) {
    auto nb = closed_back_neighborhood(ord, v);
    auto found = observation1_in_view(make_view(s, nb), v,
                                      static_cast<int>(ord.back_neighbors(v).size()));
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

Observation2Result check_observation2(const RecoloringSequence& s, const EliminationOrdering& ord,
                                      Vertex v) {
  const int d = static_cast<int>(ord.back_neighbors(v).size());
  if (d > 0 && s.palette() != 2 * d + 1) {
    throw InvalidParams("coverage check needs a palette of " + std::to_string(2 * d + 1) +
                        " colors, got " + std::to_string(s.palette()));
  }
  auto nb = closed_back_neighborhood(ord, v);
  return observation2_in_view(make_view(s, nb), ord, s.start, v);
}

std::vector<std::size_t> rotating_recolorings(const RecoloringSequence& s, Vertex x) {
  std::vector<std::size_t> where;
  std::vector<Color> history{s.start[x]};
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (s.steps[i].vertex == x) {
      where.push_back(i);
      history.push_back(s.steps[i].new_color);
    }
  }
  std::vector<std::size_t> out;
  const std::size_t q = where.size();
  for (std::size_t j = 1; j + 2 <= q; ++j) {
    if (history[j + 2] == history[j - 1]) out.push_back(where[j - 1]);
  }
  return out;
}

std::vector<std::size_t> naughty_recolorings(const RecoloringSequence& s, const Graph& g,
                                             std::span<const Vertex> clique, int d,
                                             std::optional<NaughtyWindows> windows) {
  if (static_cast<int>(clique.size()) != d - 1) {
    throw InvalidParams("naughty detection needs a clique of " + std::to_string(d - 1) +
                        " vertices, got " + std::to_string(clique.size()));
  }
  for (Vertex v : clique) {
    if (!g.contains(v)) throw InvalidParams("clique vertex " + std::to_string(v) + " out of range");
  }
  if (!g.is_clique(clique)) throw InvalidParams("vertex set is not a clique");
  std::vector<Vertex> members(clique.begin(), clique.end());
  std::vector<Color> cur;
  for (Vertex v : members) cur.push_back(s.start[v]);
  return naughty_in_view(make_view(s, clique), members, std::move(cur), s.palette(),
                         windows.value_or(NaughtyWindows::defaults(d)));
}

std::vector<std::size_t> per_vertex_counts(const RecoloringSequence& s) {
  std::vector<std::size_t> counts(s.start.size(), 0);
  for (const auto& step : s.steps) ++counts[step.vertex];
  return counts;
}

double recoloring_bound(int d) { return std::ldexp(std::pow(static_cast<double>(d), 7), 18); }

double naughty_threshold(int d) {
  return (d - 1) * recoloring_bound(d) - 160.0 * d * d * d - 1.0;
}


namespace {

std::vector<std::size_t> merged_positions(const std::vector<std::vector<std::size_t>>& positions,
                                          std::span<const Vertex> vertices) {
  std::vector<std::size_t> out;
  for (Vertex v : vertices) out.insert(out.end(), positions[v].begin(), positions[v].end());
  std::sort(out.begin(), out.end());
  return out;
}

// Every (size)-clique, listed once through its last vertex in a perfect
// elimination ordering. Non-cliques are skipped when the ordering is not perfect.
std::vector<std::vector<Vertex>> small_cliques(const Graph& g, const EliminationOrdering& ord,
                                               int size) {
  std::vector<std::vector<Vertex>> out;
  if (size <= 0) return out;
  std::vector<Vertex> pick;
  for (Vertex v : ord.order()) {
    const auto& back = ord.back_neighbors(v);
    const int need = size - 1;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(pick.size()) == need) {
        std::vector<Vertex> clique = pick;
        clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        if (g.is_clique(clique)) out.push_back(std::move(clique));
        return;
      }
      for (std::size_t i = from; i < back.size(); ++i) {
        pick.push_back(back[i]);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AnalysisReport analyze(const Graph& g, const EliminationOrdering& ord, const RecoloringSequence& s,
                       const AnalysisOptions& options) {
  const int n = g.size();
  if (ord.size() != n || s.start.size() != n) {
    throw InvalidParams("graph, ordering and sequence sizes disagree");
  }
  const int d = options.d >= 0 ? options.d : ord.max_back_degree();
  const int t = s.palette();

  AnalysisReport report;
  report.per_vertex_counts = per_vertex_counts(s);
  const auto& counts = report.per_vertex_counts;
  for (std::size_t c : counts) {
    report.max_count = std::max(report.max_count, c);
    ++report.histogram[c];
  }

  std::vector<std::vector<std::size_t>> positions(n);
  for (std::size_t i = 0; i < s.steps.size(); ++i) positions[s.steps[i].vertex].push_back(i);

  std::int64_t tight_total = 0, saved_total = 0, rotating_total = 0;
  std::int64_t obs2_checked = 0, obs2_literal = 0, full_mismatch = 0;
  for (Vertex v = 0; v < n; ++v) {
    const int p = static_cast<int>(ord.back_neighbors(v).size());
    auto nb = closed_back_neighborhood(ord, v);
    View view = make_view(s, merged_positions(positions, nb));

    VertexStats vs;
    vs.vertex = v;
    vs.count = counts[v];
    vs.back_degree = p;
    vs.tight = tight_in_view(view, v, p).size();
    auto saved = saved_in_view(view, v, p);
    vs.saved = saved.size();
    auto si = save_inequality_from(counts, ord, v, saved.size());
    vs.save_bound = si.bound;
    if (options.save_inequality && !si.holds()) {
      report.violations.push_back({"save_inequality", v, {}});
    }
    if (options.observation1) {
      auto found = observation1_in_view(view, v, p);
      report.violations.insert(report.violations.end(), found.begin(), found.end());
    }
    if (options.observation2 && p >= 1 && t == 2 * p + 1) {
      auto res = observation2_in_view(view, ord, s.start, v);
      obs2_checked += static_cast<std::int64_t>(res.checked);
      obs2_literal += static_cast<std::int64_t>(res.literal_mismatches);
      report.violations.insert(report.violations.end(), res.violations.begin(),
                               res.violations.end());
    }
    if (options.causation) {
      // Only a closing step, which ends the restriction, may be uncaused.
      for (std::size_t i = 0; i < view.size(); ++i) {
        if (view.steps[i].vertex != v || i + 1 == view.size()) continue;
        if (!caused_in_view(g, view, i)) {
          report.violations.push_back({"uncaused_recoloring", v, {view.global[i]}});
          continue;
        }
        if (view.global[i + 1] != view.global[i] + 1) ++full_mismatch;
      }
    }
    if (options.rotating) {
      const auto& where = positions[v];
      std::vector<Color> history{s.start[v]};
      for (std::size_t gi : where) history.push_back(s.steps[gi].new_color);
      for (std::size_t j = 1; j + 2 <= where.size(); ++j) {
        if (history[j + 2] == history[j - 1]) ++vs.rotating;
      }
    }
    tight_total += static_cast<std::int64_t>(vs.tight);
    saved_total += static_cast<std::int64_t>(vs.saved);
    rotating_total += static_cast<std::int64_t>(vs.rotating);
    report.vertices.push_back(vs);
  }

  auto& stats = report.statistics;
  stats["length"] = static_cast<std::int64_t>(s.steps.size());
  stats["max_count"] = static_cast<std::int64_t>(report.max_count);
  stats["d"] = d;
  stats["palette"] = t;
  stats["tight"] = tight_total;
  stats["saved"] = saved_total;
  stats["rotating"] = rotating_total;
  stats["obs2_checked"] = obs2_checked;
  stats["obs2_literal_mismatch"] = obs2_literal;
  stats["causation_full_mismatch"] = full_mismatch;

  if (options.naughty && d >= 2) {
    auto cliques = small_cliques(g, ord, d - 1);
    std::int64_t total = 0, worst = 0;
    for (const auto& clique : cliques) {
      std::vector<Color> cur;
      for (Vertex v : clique) cur.push_back(s.start[v]);
      auto found = naughty_in_view(make_view(s, merged_positions(positions, clique)), clique,
                                   std::move(cur), t, NaughtyWindows::defaults(d));
      total += static_cast<std::int64_t>(found.size());
      worst = std::max<std::int64_t>(worst, static_cast<std::int64_t>(found.size()));
    }
    stats["cliques"] = static_cast<std::int64_t>(cliques.size());
    stats["naughty_total"] = total;
    stats["naughty_max_per_clique"] = worst;
    if (t == 2 * d + 1 && static_cast<double>(worst) > naughty_threshold(d)) {
      report.violations.push_back({"naughty_threshold", -1, {}});
    }
  }
  if (options.bound && d >= 1 && t == 2 * d + 1 &&
      static_cast<double>(report.max_count) > recoloring_bound(d)) {
    report.violations.push_back({"recoloring_bound", -1, {}});
  }
  return report;
}

}  // namespace recolor
