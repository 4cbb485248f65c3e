#include "recolor/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace recolor {

Graph::Graph(int n) {
  if (n < 0) throw InvalidParams("negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!contains(u) || !contains(v)) {
    throw InvalidParams("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " out of range for n=" + std::to_string(size()));
  }
  if (u == v) throw InvalidParams("self-loop at vertex " + std::to_string(u));
  auto insert = [](std::vector<Vertex>& list, Vertex x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) return false;
    list.insert(it, x);
    return true;
  };
  if (insert(adj_[u], v)) {
    insert(adj_[v], u);
    ++num_edges_;
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = &list == &adj_[u] ? v : u;
  return std::binary_search(list.begin(), list.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_clique(std::span<const Vertex> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Color Coloring::max_color() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

EliminationOrdering::EliminationOrdering(const Graph& g, std::vector<Vertex> order)
    : order_(std::move(order)) {
  const int n = g.size();
  if (static_cast<int>(order_.size()) != n) {
    throw InvalidParams("ordering has " + std::to_string(order_.size()) + " entries for " +
                        std::to_string(n) + " vertices");
  }
  rank_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order_[i];
    if (v < 0 || v >= n || rank_[v] != -1) {
      throw InvalidParams("ordering is not a permutation (entry " + std::to_string(v) + ")");
    }
    rank_[v] = i;
  }
  back_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (rank_[w] < rank_[v]) back_[v].push_back(w);
    }
  }
}

int EliminationOrdering::max_back_degree() const {
  std::size_t best = 0;
  for (const auto& b : back_) best = std::max(best, b.size());
  return static_cast<int>(best);
}

std::optional<Edge> find_conflict(const Graph& g, const Coloring& c) {
  if (c.size() != g.size()) {
    throw PaletteError(std::min(c.size(), g.size()), 0, c.palette);
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (c[v] < 1 || c[v] > c.palette) throw PaletteError(v, c[v], c.palette);
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && c[u] == c[v]) return Edge{u, v};
    }
  }
  return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& c) { return !find_conflict(g, c).has_value(); }

void require_proper(const Graph& g, const Coloring& c, const char* context) {
  if (auto bad = find_conflict(g, c)) throw ImproperColoring(bad->first, bad->second, context);
}

std::optional<ChordlessWitness> find_imperfection(const Graph& g,
                                                  const EliminationOrdering& ord) {
  for (Vertex v : ord.order()) {
    const auto& back = ord.back_neighbors(v);
    for (std::size_t i = 0; i < back.size(); ++i) {
      for (std::size_t j = i + 1; j < back.size(); ++j) {
        if (!g.has_edge(back[i], back[j])) return ChordlessWitness{v, back[i], back[j]};
      }
    }
  }
  return std::nullopt;
}

EliminationOrdering mcs_peo(const Graph& g) {
  const int n = g.size();
  // buckets[k] holds unnumbered vertices with k numbered neighbors.
  std::vector<std::set<Vertex>> buckets(n + 1);
  std::vector<int> label(n, 0);
  std::vector<char> done(n, 0);
  for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);

  std::vector<Vertex> order;
  order.reserve(n);
  int top = 0;
  for (int step = 0; step < n; ++step) {
    while (top > 0 && buckets[top].empty()) --top;
    Vertex v = *buckets[top].begin();
    buckets[top].erase(buckets[top].begin());
    done[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (done[w]) continue;
      buckets[label[w]].erase(w);
      ++label[w];
      buckets[label[w]].insert(w);
      top = std::max(top, label[w]);
    }
  }

  EliminationOrdering ord(g, std::move(order));
  if (auto bad = find_imperfection(g, ord)) throw NotChordal(bad->vertex, bad->a, bad->b);
  return ord;
}

Degeneracy degeneracy(const Graph& g) {
  const int n = g.size();
  std::set<std::pair<int, Vertex>> queue;
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  std::vector<Vertex> peel;
  peel.reserve(n);
  int d = 0;
  while (!queue.empty()) {
    auto [k, v] = *queue.begin();
    queue.erase(queue.begin());
    d = std::max(d, k);
    removed[v] = 1;
    peel.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  std::reverse(peel.begin(), peel.end());
  return {d, EliminationOrdering(g, std::move(peel))};
}

Coloring greedy_color(const Graph& g, const EliminationOrdering& ord, int palette) {
  if (ord.size() != g.size()) throw InvalidParams("ordering does not match graph");
  Coloring c(std::vector<Color>(g.size(), 0), palette);
  std::vector<char> used(palette + 2, 0);
  for (Vertex v : ord.order()) {
    const auto& back = ord.back_neighbors(v);
    if (static_cast<int>(back.size()) >= palette) {
      throw PaletteExhausted(v, static_cast<int>(back.size()), palette);
    }
    for (Vertex w : back) used[c[w]] = 1;
    Color pick = 1;
    while (used[pick]) ++pick;
    c[v] = pick;
    for (Vertex w : back) used[c[w]] = 0;
  }
  return c;
}

}  // namespace recolor
