#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace recolor {

inline constexpr std::uint64_t kDefaultStateCap = 2'000'000;

/// The reconfiguration graph R_t(G) over an explicit base-t encoding.
///
/// Every t-coloring has a code in [0, t^n); only proper colorings are states.
/// Construction fails fast with StateCapExceeded when t^n exceeds `cap`.
class StateSpace {
 public:
  StateSpace(const Graph& g, int t, std::uint64_t cap = kDefaultStateCap);

  const Graph& graph() const { return *g_; }
  int palette() const { return t_; }
  std::uint64_t num_codes() const { return codes_; }

  std::uint64_t encode(const Coloring& c) const;
  Coloring decode(std::uint64_t code) const;
  bool is_state(std::uint64_t code) const;

  /// Calls `visit(next_code, vertex, color)` for every neighbor of a state,
  /// vertices ascending, then colors ascending.
  void for_each_neighbor(std::uint64_t code,
                         const std::function<void(std::uint64_t, Vertex, Color)>& visit) const;

  std::size_t degree(std::uint64_t code) const;

 private:
  const Graph* g_;
  int t_;
  std::uint64_t codes_ = 1;
  std::vector<std::uint64_t> weight_;  // t^v
};

/// Number of proper t-colorings, by backtracking. Throws StateCapExceeded.
std::uint64_t enumerate_colorings(const Graph& g, int t, std::uint64_t cap = kDefaultStateCap,
                                  const std::function<void(const Coloring&)>& visit = {});

/// A shortest path a -> b in R_t(G) as a recoloring sequence, or nullopt when
/// b is unreachable. Throws ImproperColoring for improper endpoints.
std::optional<RecoloringSequence> rt_shortest_path(const Graph& g, int t, const Coloring& a,
                                                   const Coloring& b,
                                                   std::uint64_t cap = kDefaultStateCap);

std::optional<std::size_t> rt_distance(const Graph& g, int t, const Coloring& a, const Coloring& b,
                                       std::uint64_t cap = kDefaultStateCap);

struct MixingReport {
  std::uint64_t states = 0;
  std::uint64_t components = 0;
  std::uint64_t frozen = 0;  // states with no neighbor in R_t(G)

  /// False both for several components and for an empty state space.
  bool connected() const { return components == 1; }
};

MixingReport rt_components(const Graph& g, int t, std::uint64_t cap = kDefaultStateCap);

inline bool rt_connected(const Graph& g, int t, std::uint64_t cap = kDefaultStateCap) {
  return rt_components(g, t, cap).connected();
}

/// Diameter of R_t(G), or nullopt (infinite) when it is disconnected or empty.
std::optional<std::size_t> rt_diameter(const Graph& g, int t, std::uint64_t cap = kDefaultStateCap);

/// No single vertex can change color while keeping the coloring proper.
bool is_frozen(const Graph& g, const Coloring& c);

}  // namespace recolor
