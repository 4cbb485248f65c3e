#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "recolor/errors.hpp"

namespace recolor {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on the dense vertex ids 0..n-1.
///
/// Neighbor lists are kept sorted and duplicate-free, so `neighbors(v)` can be
/// used as an ordered set and `has_edge` is a binary search.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  /// Adds the edge uv; a repeated edge is ignored. Self-loops are rejected.
  void add_edge(Vertex u, Vertex v);

  int size() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < size(); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_clique(std::span<const Vertex> vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// A total map vertex -> color in {1..palette}.
struct Coloring {
  std::vector<Color> colors;
  int palette = 0;

  Coloring() = default;
  Coloring(std::vector<Color> c, int t) : colors(std::move(c)), palette(t) {}

  int size() const { return static_cast<int>(colors.size()); }
  Color operator[](Vertex v) const { return colors[v]; }
  Color& operator[](Vertex v) { return colors[v]; }
  Color max_color() const;

  bool operator==(const Coloring&) const = default;
};

/// Vertex ordering v_1..v_n with cached back-neighborhoods N^-(v).
class EliminationOrdering {
 public:
  EliminationOrdering() = default;

  /// `order[i]` is the (i+1)-th vertex. Throws InvalidParams unless `order`
  /// is a permutation of the vertices of `g`.
  EliminationOrdering(const Graph& g, std::vector<Vertex> order);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const { return order_; }
  Vertex at(int i) const { return order_[i]; }
  int rank(Vertex v) const { return rank_[v]; }

  /// Neighbors of v that come earlier in the ordering, sorted by id.
  const std::vector<Vertex>& back_neighbors(Vertex v) const { return back_[v]; }
  int max_back_degree() const;

 private:
  std::vector<Vertex> order_;
  std::vector<int> rank_;
  std::vector<std::vector<Vertex>> back_;
};

/// Throws PaletteError if a color is outside {1..t} or the coloring does not
/// cover the graph; otherwise returns whether no edge is monochromatic.
bool is_proper(const Graph& g, const Coloring& c);

/// First monochromatic edge in edge order, if any. Palette errors throw as in
/// `is_proper`.
std::optional<Edge> find_conflict(const Graph& g, const Coloring& c);

/// Throws ImproperColoring naming `context` unless `c` is a proper coloring.
void require_proper(const Graph& g, const Coloring& c, const char* context);

struct ChordlessWitness {
  Vertex vertex;
  Vertex a;
  Vertex b;
};

/// Checks that every back-neighborhood of `ord` is a clique.
std::optional<ChordlessWitness> find_imperfection(const Graph& g, const EliminationOrdering& ord);

/// Maximum cardinality search (ties to the smallest id), certified by a clique
/// check on every back-neighborhood. Throws NotChordal with the witness.
EliminationOrdering mcs_peo(const Graph& g);

struct Degeneracy {
  int d = 0;
  EliminationOrdering ordering;
};

/// Exact degeneracy by min-degree peeling (ties to the smallest id). The
/// ordering is the reversed peeling order, so |N^-(v)| <= d everywhere.
Degeneracy degeneracy(const Graph& g);

/// Smallest-free-color greedy coloring along `ord`.
Coloring greedy_color(const Graph& g, const EliminationOrdering& ord, int palette);

}  // namespace recolor
