#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recolor/best_choice.hpp"
#include "recolor/graph.hpp"
#include "recolor/oracle.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  bool operator==(const TreeDecomposition&) const = default;
};

/// Returns the width (largest bag size minus one) of a valid decomposition.
/// Throws DecompositionError naming the violated condition and a witness.
int validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Quotient map pi: V(G) -> V(G'') and its fibers.
struct MergeMap {
  std::vector<Vertex> pi;
  std::vector<std::vector<Vertex>> fibers;  // sorted by id

  static MergeMap identity(int n);
  int quotient_size() const { return static_cast<int>(fibers.size()); }
};

struct MergeResult {
  Graph graph;  // G'': the quotient with every bag saturated into a clique
  MergeMap map;
  Coloring coloring;             // alpha carried to G''
  TreeDecomposition decomposition;
  EliminationOrdering peo;       // certified PEO of G''
  int width = 0;                 // width of the input decomposition
};

/// Identifies same-colored vertices sharing a bag until no bag holds two
/// vertices of one color, then saturates every bag. Pairs are merged one at a
/// time: the first bag (by index) holding a same-colored pair merges its
/// lowest such pair, then the scan restarts. Quotient vertices are numbered by
/// the smallest original id in their fiber.
MergeResult merge_by_coloring(const Graph& g, const TreeDecomposition& td, const Coloring& alpha);

/// Gives every vertex of G the color of its quotient vertex.
Coloring project_coloring(const MergeMap& mm, const Coloring& quotient);

/// Replaces each quotient step (w, c) by (u, c) for u in the fiber of w, in
/// id order. Throws InvalidQuotientSequence unless `s2` is valid on `g2`.
RecoloringSequence expand_sequence(const Graph& g2, const MergeMap& mm,
                                   const RecoloringSequence& s2);

enum class Bridge { Oracle, None };

struct PipelineResult {
  int width = 0;
  RecoloringSequence alpha_half;  // alpha -> gamma1
  RecoloringSequence beta_half;   // beta -> gamma2
  Coloring gamma1;
  Coloring gamma2;
  bool bridge_available = false;
  std::optional<RecoloringSequence> bridge;    // gamma1 -> gamma2
  std::optional<RecoloringSequence> composed;  // alpha -> beta
  std::vector<std::size_t> counts;             // per vertex, over the composed sequence or both halves
};

/// Moves alpha and beta to (k+1)-colorings through the merged chordal graphs,
/// then, with the oracle bridge, joins the two halves into one sequence from
/// alpha to beta. Needs t >= 2k+1 for the decomposition width k.
PipelineResult corollary_pipeline(const Graph& g, const TreeDecomposition& td,
                                  const Coloring& alpha, const Coloring& beta, int t,
                                  Bridge bridge, std::uint64_t state_cap = kDefaultStateCap);

}  // namespace recolor
