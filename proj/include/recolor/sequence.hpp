#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

struct RecoloringStep {
  Vertex vertex;
  Color new_color;

  bool operator==(const RecoloringStep&) const = default;
};

/// An ordered list of single-vertex recolorings applied to `start`.
struct RecoloringSequence {
  Coloring start;
  std::vector<RecoloringStep> steps;

  int palette() const { return start.palette; }
  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }

  bool operator==(const RecoloringSequence&) const = default;
};

/// Replays `s` and validates it: the start coloring and every intermediate
/// coloring are proper, and every step changes its vertex's color. Returns the
/// final coloring. With `trace`, writes one line per step holding the step and
/// the full coloring after it.
Coloring apply_sequence(const Graph& g, const RecoloringSequence& s, std::ostream* trace = nullptr);

/// Replays `s` without validation and returns the color each step overwrites.
std::vector<Color> pre_colors(const RecoloringSequence& s);

/// Final coloring of `s` without validation.
Coloring final_coloring(const RecoloringSequence& s);

/// The sequence leading from the final coloring of `s` back to its start.
RecoloringSequence reverse_sequence(const Graph& g, const RecoloringSequence& s);

/// `first` followed by `second`; `second` must start where `first` ends.
RecoloringSequence concat(const RecoloringSequence& first, const RecoloringSequence& second);

}  // namespace recolor
