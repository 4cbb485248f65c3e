#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "recolor/graph.hpp"
#include "recolor/treewidth.hpp"

namespace recolor {

/// Seeded generator with a portable bounded draw, so that instances are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct Instance {
  Graph graph;
  TreeDecomposition decomposition;
  EliminationOrdering ordering;
};

/// Random k-tree: K_{k+1}, then each new vertex joins a uniformly chosen
/// existing k-clique. The ordering is the construction order, whose
/// back-neighborhoods are exactly the chosen cliques; the decomposition has
/// one bag per attachment and width k.
Instance gen_ktree(int n, int k, std::uint64_t seed);

/// A random k-tree with each edge kept with probability `keep`. The
/// decomposition of the k-tree is kept; the ordering is a degeneracy ordering.
Instance gen_partial_ktree(int n, int k, double keep, std::uint64_t seed);

/// Random chordal graph with back-degrees at most d: each new vertex joins a
/// random subset of N^-[u] for a random earlier vertex u.
Instance gen_chordal(int n, int d, std::uint64_t seed);

/// Proper coloring drawn color by color along `ord`, uniform over the colors
/// not used by back-neighbors. Throws PaletteExhausted when none is left.
Coloring gen_random_coloring(const Graph& g, const EliminationOrdering& ord, int t,
                             std::uint64_t seed);

}  // namespace recolor
