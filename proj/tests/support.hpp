#pragma once

// Independent reference implementations used as test oracles. They avoid the
// library's algorithms on purpose: exhaustive enumeration instead of
// backtracking, simplicial elimination instead of MCS, subset scans instead of
// peeling.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"

namespace testing {

using recolor::Color;
using recolor::Coloring;
using recolor::Graph;
using recolor::RecoloringSequence;
using recolor::Vertex;

inline bool adjacent(const Graph& g, Vertex u, Vertex v) {
  const auto& nb = g.neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

inline bool proper(const Graph& g, const std::vector<Color>& c) {
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex w = u + 1; w < g.size(); ++w) {
      if (adjacent(g, u, w) && c[u] == c[w]) return false;
    }
  }
  return true;
}

/// Replays `s` step by step; nullopt if any step is a null move, out of range
/// or leaves a monochromatic edge.
inline std::optional<std::vector<Color>> replay(const Graph& g, const RecoloringSequence& s) {
  std::vector<Color> c = s.start.colors;
  const int t = s.start.palette;
  if (static_cast<int>(c.size()) != g.size() || !proper(g, c)) return std::nullopt;
  for (auto [v, x] : s.steps) {
    if (v < 0 || v >= g.size() || x < 1 || x > t || c[v] == x) return std::nullopt;
    c[v] = x;
    if (!proper(g, c)) return std::nullopt;
  }
  return c;
}

/// Every proper t-coloring, by counting through all t^n assignments.
inline std::vector<std::vector<Color>> all_colorings(const Graph& g, int t) {
  std::vector<std::vector<Color>> out;
  std::vector<Color> c(g.size(), 1);
  while (true) {
    if (proper(g, c)) out.push_back(c);
    int i = 0;
    while (i < g.size() && c[i] == t) c[i++] = 1;
    if (i == g.size()) break;
    ++c[i];
  }
  return out;
}

inline bool one_apart(const std::vector<Color>& a, const std::vector<Color>& b) {
  int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return diff == 1;
}

/// All-pairs distances in R_t(G) by Floyd-Warshall; -1 for unreachable.
struct Reconfiguration {
  std::vector<std::vector<Color>> states;
  std::vector<std::vector<int>> dist;

  Reconfiguration(const Graph& g, int t) : states(all_colorings(g, t)) {
    const std::size_t m = states.size();
    const int inf = std::numeric_limits<int>::max() / 4;
    dist.assign(m, std::vector<int>(m, inf));
    for (std::size_t i = 0; i < m; ++i) {
      dist[i][i] = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (one_apart(states[i], states[j])) dist[i][j] = 1;
      }
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        }
      }
    }
    for (auto& row : dist) {
      for (auto& x : row) {
        if (x >= inf) x = -1;
      }
    }
  }

  std::size_t index(const std::vector<Color>& c) const {
    return static_cast<std::size_t>(std::find(states.begin(), states.end(), c) - states.begin());
  }
  int distance(const std::vector<Color>& a, const std::vector<Color>& b) const {
    return dist[index(a)][index(b)];
  }
  bool connected() const {
    for (const auto& row : dist) {
      for (int x : row) {
        if (x < 0) return false;
      }
    }
    return !states.empty();
  }
  // -1 for Infinite; an empty state space counts as disconnected.
  int diameter() const {
    if (states.empty()) return -1;
    int best = 0;
    for (const auto& row : dist) {
      for (int x : row) {
        if (x < 0) return -1;
        best = std::max(best, x);
      }
    }
    return best;
  }
};

/// Single-pair distance by plain BFS over colorings held in a map; -1 when
/// unreachable. Cheaper than the all-pairs table for larger state spaces.
inline int bfs_distance(const Graph& g, int t, const std::vector<Color>& a, const std::vector<Color>& b) {
  std::map<std::vector<Color>, int> dist{{a, 0}};
  std::vector<std::vector<Color>> frontier{a};
  while (!frontier.empty()) {
    std::vector<std::vector<Color>> next;
    for (const auto& cur : frontier) {
      if (cur == b) return dist[cur];
      for (Vertex v = 0; v < g.size(); ++v) {
        for (Color x = 1; x <= t; ++x) {
          if (x == cur[v]) continue;
          auto nb = cur;
          nb[v] = x;
          if (!proper(g, nb) || dist.count(nb)) continue;
          dist[nb] = dist[cur] + 1;
          next.push_back(std::move(nb));
        }
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

/// Chordality by repeatedly deleting a simplicial vertex.
inline bool chordal_by_elimination(const Graph& g) {
  std::set<Vertex> alive;
  for (Vertex v = 0; v < g.size(); ++v) alive.insert(v);
  while (!alive.empty()) {
    bool removed = false;
    for (Vertex v : alive) {
      std::vector<Vertex> nb;
      for (Vertex w : g.neighbors(v)) {
        if (alive.count(w)) nb.push_back(w);
      }
      bool simplicial = true;
      for (std::size_t i = 0; i < nb.size() && simplicial; ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!adjacent(g, nb[i], nb[j])) {
            simplicial = false;
            break;
          }
        }
      }
      if (simplicial) {
        alive.erase(v);
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

/// Degeneracy as the maximum over vertex subsets of the minimum induced degree.
inline int degeneracy_by_subsets(const Graph& g) {
  const int n = g.size();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int mindeg = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int deg = 0;
      for (Vertex w : g.neighbors(v)) deg += mask >> w & 1;
      mindeg = std::min(mindeg, deg);
    }
    best = std::max(best, mindeg);
  }
  return best;
}

/// Vertex ids of each step.
inline std::vector<Vertex> vertices_of(const RecoloringSequence& s) {
  std::vector<Vertex> out;
  for (const auto& st : s.steps) out.push_back(st.vertex);
  return out;
}

}  // namespace testing
