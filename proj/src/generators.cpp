#include "recolor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace recolor {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Instance gen_ktree(int n, int k, std::uint64_t seed) {
  if (k < 0 || n < k + 1) {
    throw InvalidParams("k-tree needs k >= 0 and n >= k+1 (n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")");
  }
  Rng rng(seed);
  Graph g(n);
  Instance inst;
  auto& td = inst.decomposition;

  std::vector<Vertex> base(k + 1);
  std::iota(base.begin(), base.end(), 0);
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) g.add_edge(i, j);
  }
  td.bags.push_back(base);

  // Every k-clique seen so far and a bag containing it.
  std::vector<std::vector<Vertex>> cliques;
  std::vector<int> home;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<Vertex> c;
    for (int i = 0; i <= k; ++i) {
      if (i != skip) c.push_back(i);
    }
    cliques.push_back(std::move(c));
    home.push_back(0);
    if (k == 0) break;  // the empty clique, once
  }

  for (Vertex v = k + 1; v < n; ++v) {
    const std::size_t pick = rng.below(cliques.size());
    const std::vector<Vertex> c = cliques[pick];
    for (Vertex u : c) g.add_edge(u, v);
    std::vector<Vertex> bag = c;
    bag.push_back(v);
    const int b = static_cast<int>(td.bags.size());
    td.bags.push_back(bag);
    td.tree_edges.emplace_back(home[pick], b);
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      std::vector<Vertex> next;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != drop) next.push_back(c[i]);
      }
      next.push_back(v);
      cliques.push_back(std::move(next));
      home.push_back(b);
    }
  }

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  inst.ordering = EliminationOrdering(g, std::move(order));
  inst.graph = std::move(g);
  return inst;
}

Instance gen_partial_ktree(int n, int k, double keep, std::uint64_t seed) {
  if (keep < 0.0 || keep > 1.0) throw InvalidParams("edge retention must lie in [0, 1]");
  Instance full = gen_ktree(n, k, seed);
  Rng rng(derive_seed(seed, 1));
  Graph g(n);
  for (auto [u, v] : full.graph.edges()) {
    if (rng.unit() < keep) g.add_edge(u, v);
  }
  Instance inst;
  inst.decomposition = std::move(full.decomposition);
  inst.ordering = degeneracy(g).ordering;
  inst.graph = std::move(g);
  return inst;
}

Instance gen_chordal(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw InvalidParams("chordal generator needs n >= 1 and d >= 0");
  Rng rng(seed);
  Graph g(n);
  Instance inst;
  auto& td = inst.decomposition;
  std::vector<std::vector<Vertex>> back(n);
  td.bags.push_back({0});
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    std::vector<Vertex> pool = back[u];
    pool.push_back(u);
    const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(d), pool.size());
    const std::size_t size = rng.below(cap + 1);
    // Partial Fisher-Yates for a uniform subset of `size` elements.
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    for (Vertex w : pool) g.add_edge(v, w);
    back[v] = pool;
    std::vector<Vertex> bag = pool;
    bag.push_back(v);
    td.bags.push_back(std::move(bag));
    td.tree_edges.emplace_back(u, v);  // bag index == vertex id
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  inst.ordering = EliminationOrdering(g, std::move(order));
  inst.graph = std::move(g);
  return inst;
}

Coloring gen_random_coloring(const Graph& g, const EliminationOrdering& ord, int t,
                             std::uint64_t seed) {
  if (ord.size() != g.size()) throw InvalidParams("ordering does not match graph");
  Rng rng(seed);
  Coloring c(std::vector<Color>(g.size(), 0), t);
  std::vector<char> used(t + 1, 0);
  std::vector<Color> free;
  for (Vertex v : ord.order()) {
    for (Vertex w : ord.back_neighbors(v)) used[c[w]] = 1;
    free.clear();
    for (Color x = 1; x <= t; ++x) {
      if (!used[x]) free.push_back(x);
    }
    for (Vertex w : ord.back_neighbors(v)) used[c[w]] = 0;
    if (free.empty()) {
      throw PaletteExhausted(v, static_cast<int>(ord.back_neighbors(v).size()), t);
    }
    c[v] = free[rng.below(free.size())];
  }
  return c;
}

}  // namespace recolor
