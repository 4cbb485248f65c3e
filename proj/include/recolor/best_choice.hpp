#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

enum class ChoiceRule {
  Target,          // the target color, valid and absent from the future
  Unused,          // smallest valid color absent from the future
  LatestFirstUse,  // valid color whose first future occurrence is latest
};

struct BestChoice {
  Color color;
  ChoiceRule rule;
  /// The target was absent from the future but not currently valid.
  bool target_blocked;
};

/// Best-choice color for a vertex that must move now.
///
/// `valid` holds the colors currently free at the vertex. `future` lists the
/// new colors of the vertex's neighbor recolorings from the triggering step
/// onward. Throws EmptyValidSet(-1, -1) when `valid` is empty.
BestChoice best_choice(Color target, std::span<const Color> valid, std::span<const Color> future);

inline Color select_best_choice(Color target, std::span<const Color> valid,
                                std::span<const Color> future) {
  return best_choice(target, valid, future).color;
}

/// Counters collected while building sequences.
struct EngineStats {
  std::uint64_t by_target = 0;
  std::uint64_t by_unused = 0;
  std::uint64_t by_latest = 0;
  std::uint64_t target_blocked = 0;
  std::uint64_t closing_steps = 0;

  void record(const BestChoice& choice);
  EngineStats& operator+=(const EngineStats& other);
};

/// Extends `s`, a sequence that never recolors `u`, by recolorings of `u`.
///
/// Whenever a step gives a vertex of `nbrs` the current color of `u`, a
/// recoloring of `u` to its best choice is inserted just before that step; a
/// closing step to `beta_u` is appended when needed. The start coloring of the
/// result is `s.start` with `u` set to `alpha_u`.
RecoloringSequence local_best_choice(const Graph& g, Vertex u, std::span<const Vertex> nbrs,
                                     const RecoloringSequence& s, Color alpha_u, Color beta_u,
                                     EngineStats* stats = nullptr);

/// Runs `local_best_choice` on v_1..v_n of `ord` with N^-(v_i) as neighbors,
/// from `alpha` to `beta`. With `stages` < n, stops after the first `stages`
/// vertices and returns the sequence for G[V_stages].
RecoloringSequence best_choice_sequence(const Graph& g, const EliminationOrdering& ord,
                                        const Coloring& alpha, const Coloring& beta,
                                        EngineStats* stats = nullptr, int stages = -1);

}  // namespace recolor
