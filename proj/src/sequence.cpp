#include "recolor/sequence.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace recolor {

namespace {

void check_step_range(const Graph& g, const RecoloringSequence& s, std::size_t i) {
  const auto& step = s.steps[i];
  if (!g.contains(step.vertex) || step.new_color < 1 || step.new_color > s.palette()) {
    throw SequenceError(SequenceError::Kind::BadStep, static_cast<std::int64_t>(i), step.vertex,
                        step.new_color,
                        "step " + std::to_string(i) + " (" + std::to_string(step.vertex) + ", " +
                            std::to_string(step.new_color) + ") is out of range");
  }
}

}  // namespace

Coloring apply_sequence(const Graph& g, const RecoloringSequence& s, std::ostream* trace) {
  if (auto bad = find_conflict(g, s.start)) {
    throw SequenceError(SequenceError::Kind::ImproperStart, -1, bad->first, bad->second,
                        "start coloring has monochromatic edge " + std::to_string(bad->first) +
                            "-" + std::to_string(bad->second));
  }
  Coloring cur = s.start;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    check_step_range(g, s, i);
    auto [v, c] = s.steps[i];
    if (cur[v] == c) {
      throw SequenceError(SequenceError::Kind::NullStep, static_cast<std::int64_t>(i), v, -1,
                          "step " + std::to_string(i) + " recolors vertex " + std::to_string(v) +
                              " to its current color " + std::to_string(c));
    }
    for (Vertex w : g.neighbors(v)) {
      if (cur[w] == c) {
        throw SequenceError(SequenceError::Kind::ImproperIntermediate,
                            static_cast<std::int64_t>(i), v, w,
                            "step " + std::to_string(i) + " makes edge " + std::to_string(v) +
                                "-" + std::to_string(w) + " monochromatic");
      }
    }
    cur[v] = c;
    if (trace) {
      *trace << i << " (" << v << "," << c << ") [";
      for (Vertex u = 0; u < cur.size(); ++u) *trace << (u ? " " : "") << cur[u];
      *trace << "]\n";
    }
  }
  return cur;
}

std::vector<Color> pre_colors(const RecoloringSequence& s) {
  std::vector<Color> cur = s.start.colors;
  std::vector<Color> pre;
  pre.reserve(s.steps.size());
  for (auto [v, c] : s.steps) {
    pre.push_back(cur[v]);
    cur[v] = c;
  }
  return pre;
}

Coloring final_coloring(const RecoloringSequence& s) {
  Coloring cur = s.start;
  for (auto [v, c] : s.steps) cur[v] = c;
  return cur;
}

RecoloringSequence reverse_sequence(const Graph& g, const RecoloringSequence& s) {
  RecoloringSequence out;
  out.start = apply_sequence(g, s);
  auto pre = pre_colors(s);
  out.steps.reserve(s.steps.size());
  for (std::size_t i = s.steps.size(); i-- > 0;) {
    out.steps.push_back({s.steps[i].vertex, pre[i]});
  }
  return out;
}

RecoloringSequence concat(const RecoloringSequence& first, const RecoloringSequence& second) {
  if (final_coloring(first) != second.start) {
    throw InvalidParams("cannot concatenate: second sequence does not start where first ends");
  }
  RecoloringSequence out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

}  // namespace recolor
