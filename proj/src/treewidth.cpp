#include "recolor/treewidth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace recolor {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

// Union-find keeping the smallest id as representative.
struct Fibers {
  std::vector<Vertex> parent;

  explicit Fibers(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  Vertex find(Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

int validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  using Kind = DecompositionError::Kind;
  const int n = g.size();
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) {
    if (n == 0) return -1;
    throw DecompositionError(Kind::UncoveredVertex, 0, -1, "vertex 0 is in no bag");
  }

  // The bag tree: nb-1 edges, all in range, connected.
  if (static_cast<int>(td.tree_edges.size()) != nb - 1) {
    throw DecompositionError(Kind::NotATree, -1, -1,
                             std::to_string(td.tree_edges.size()) + " tree edges for " +
                                 std::to_string(nb) + " bags");
  }
  std::vector<std::vector<int>> tree(nb);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb || a == b) {
      throw DecompositionError(Kind::NotATree, a, b, "bad tree edge");
    }
    tree[a].push_back(b);
    tree[b].push_back(a);
  }
  {
    std::vector<char> seen(nb, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != nb) throw DecompositionError(Kind::NotATree, -1, -1, "bag tree is disconnected");
  }

  std::vector<std::vector<int>> where(n);
  std::size_t widest = 0;
  for (int i = 0; i < nb; ++i) {
    std::vector<Vertex> bag = td.bags[i];
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      throw DecompositionError(Kind::BadBag, i, -1, "bag " + std::to_string(i) + " repeats a vertex");
    }
    for (Vertex v : bag) {
      if (!g.contains(v)) {
        throw DecompositionError(Kind::BadBag, i, v,
                                 "bag " + std::to_string(i) + " holds unknown vertex " + vname(v));
      }
      where[v].push_back(i);
    }
    widest = std::max(widest, bag.size());
  }

  for (Vertex v = 0; v < n; ++v) {
    if (where[v].empty()) {
      throw DecompositionError(Kind::UncoveredVertex, v, -1, "vertex " + vname(v) + " is in no bag");
    }
  }
  for (auto [u, v] : g.edges()) {
    std::vector<int> both;
    std::set_intersection(where[u].begin(), where[u].end(), where[v].begin(), where[v].end(),
                          std::back_inserter(both));
    if (both.empty()) {
      throw DecompositionError(Kind::UncoveredEdge, u, v,
                               "edge " + vname(u) + "-" + vname(v) + " is in no bag");
    }
  }

  // Trace connectivity: the bags holding v must induce a connected subtree.
  std::vector<char> holds(nb, 0), seen(nb, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (int i : where[v]) holds[i] = 1;
    std::vector<int> stack{where[v].front()};
    seen[where[v].front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree[x]) {
        if (holds[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    for (int i : where[v]) holds[i] = seen[i] = 0;
    if (reached != where[v].size()) {
      throw DecompositionError(Kind::DisconnectedTrace, v, -1,
                               "bags holding vertex " + vname(v) + " are not connected");
    }
  }
  return static_cast<int>(widest) - 1;
}

MergeMap MergeMap::identity(int n) {
  MergeMap mm;
  mm.pi.resize(n);
  mm.fibers.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    mm.pi[v] = v;
    mm.fibers[v] = {v};
  }
  return mm;
}

MergeResult merge_by_coloring(const Graph& g, const TreeDecomposition& td, const Coloring& alpha) {
  const int width = validate_decomposition(g, td);
  require_proper(g, alpha, "alpha");
  const int n = g.size();

  Fibers uf(n);
  std::vector<Vertex> reps;
  for (bool merged = true; merged;) {
    merged = false;
    for (const auto& bag : td.bags) {
      reps.clear();
      for (Vertex v : bag) reps.push_back(uf.find(v));
      std::sort(reps.begin(), reps.end());
      reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
      // Representatives keep their fiber's color; find the lowest same-color pair.
      for (std::size_t i = 0; i < reps.size() && !merged; ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
          if (alpha[reps[i]] == alpha[reps[j]]) {
            uf.unite(reps[i], reps[j]);
            merged = true;
            break;
          }
        }
      }
      if (merged) break;
    }
  }

  MergeResult out;
  out.width = width;
  std::vector<Vertex> dense(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = uf.find(v);
    if (dense[r] < 0) {
      dense[r] = out.map.quotient_size();
      out.map.fibers.emplace_back();
    }
  }
  out.map.pi.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = dense[uf.find(v)];
    out.map.pi[v] = w;
    out.map.fibers[w].push_back(v);
  }
  const int m = out.map.quotient_size();

  out.coloring = Coloring(std::vector<Color>(m), alpha.palette);
  for (Vertex w = 0; w < m; ++w) out.coloring[w] = alpha[out.map.fibers[w].front()];

  out.decomposition.tree_edges = td.tree_edges;
  Graph g2(m);
  for (const auto& bag : td.bags) {
    std::vector<Vertex> qbag;
    for (Vertex v : bag) qbag.push_back(out.map.pi[v]);
    std::sort(qbag.begin(), qbag.end());
    qbag.erase(std::unique(qbag.begin(), qbag.end()), qbag.end());
    for (std::size_t i = 0; i < qbag.size(); ++i) {
      for (std::size_t j = i + 1; j < qbag.size(); ++j) g2.add_edge(qbag[i], qbag[j]);
    }
    out.decomposition.bags.push_back(std::move(qbag));
  }
  out.graph = std::move(g2);

  // Certify the construction rather than trusting it.
  for (auto [u, v] : g.edges()) {
    if (out.map.pi[u] == out.map.pi[v]) {
      throw ImproperColoring(u, v, "merged fiber is not independent");
    }
  }
  validate_decomposition(out.graph, out.decomposition);
  require_proper(out.graph, out.coloring, "merged coloring");
  out.peo = mcs_peo(out.graph);
  return out;
}

Coloring project_coloring(const MergeMap& mm, const Coloring& quotient) {
  if (quotient.size() != mm.quotient_size()) {
    throw InvalidParams("quotient coloring does not match the merge map");
  }
  Coloring out(std::vector<Color>(mm.pi.size()), quotient.palette);
  for (std::size_t u = 0; u < mm.pi.size(); ++u) out[static_cast<Vertex>(u)] = quotient[mm.pi[u]];
  return out;
}

RecoloringSequence expand_sequence(const Graph& g2, const MergeMap& mm,
                                   const RecoloringSequence& s2) {
  try {
    apply_sequence(g2, s2);
  } catch (const Error& e) {
    throw InvalidQuotientSequence(std::string("quotient sequence is invalid: ") + e.what());
  }
  RecoloringSequence out;
  out.start = project_coloring(mm, s2.start);
  for (auto [w, c] : s2.steps) {
    for (Vertex u : mm.fibers[w]) out.steps.push_back({u, c});
  }
  return out;
}

namespace {

struct Half {
  RecoloringSequence sequence;
  Coloring target;
};

// Best-choice route on G'' from `start` to a greedy (k+1)-coloring, expanded to G.
Half to_small_palette(const Graph& g, const TreeDecomposition& td, const Coloring& start, int t) {
  MergeResult merged = merge_by_coloring(g, td, start);
  const int k = std::max(0, merged.width);
  Coloring small = greedy_color(merged.graph, merged.peo, std::max(1, k + 1));
  small.palette = t;
  RecoloringSequence quotient =
      best_choice_sequence(merged.graph, merged.peo, merged.coloring, small);
  Half half;
  half.sequence = expand_sequence(merged.graph, merged.map, quotient);
  half.target = project_coloring(merged.map, small);
  return half;
}

}  // namespace

PipelineResult corollary_pipeline(const Graph& g, const TreeDecomposition& td,
                                  const Coloring& alpha, const Coloring& beta, int t,
                                  Bridge bridge, std::uint64_t state_cap) {
  PipelineResult out;
  out.width = validate_decomposition(g, td);
  if (t < 2 * out.width + 1) {
    throw InvalidParams("palette " + std::to_string(t) + " below 2k+1 for width " +
                        std::to_string(out.width));
  }
  if (alpha.palette != t || beta.palette != t) {
    throw InvalidParams("alpha and beta must use the pipeline palette");
  }
  require_proper(g, alpha, "alpha");
  require_proper(g, beta, "beta");

  Half a = to_small_palette(g, td, alpha, t);
  Half b = to_small_palette(g, td, beta, t);
  out.alpha_half = std::move(a.sequence);
  out.beta_half = std::move(b.sequence);
  out.gamma1 = std::move(a.target);
  out.gamma2 = std::move(b.target);

  out.counts.assign(g.size(), 0);
  for (const auto& step : out.alpha_half.steps) ++out.counts[step.vertex];
  for (const auto& step : out.beta_half.steps) ++out.counts[step.vertex];
  if (bridge == Bridge::None) return out;

  const double states = std::pow(static_cast<double>(t), g.size());
  if (states > static_cast<double>(state_cap)) throw OracleInfeasible(states, state_cap);
  auto path = rt_shortest_path(g, t, out.gamma1, out.gamma2, state_cap);
  if (!path) throw Error("oracle found no path between the two small-palette colorings");
  out.bridge = std::move(*path);
  out.bridge_available = true;

  RecoloringSequence back = reverse_sequence(g, out.beta_half);
  RecoloringSequence full = concat(concat(out.alpha_half, *out.bridge), back);
  apply_sequence(g, full);
  out.counts.assign(g.size(), 0);
  for (const auto& step : full.steps) ++out.counts[step.vertex];
  out.composed = std::move(full);
  return out;
}

}  // namespace recolor
