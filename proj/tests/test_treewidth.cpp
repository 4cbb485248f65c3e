#include <doctest.h>

#include "recolor/analysis.hpp"
#include "recolor/generators.hpp"
#include "recolor/treewidth.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

Graph c4() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
TreeDecomposition c4_td() { return {{{0, 1, 2}, {0, 2, 3}}, {{0, 1}}}; }
Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
TreeDecomposition p3_td() { return {{{0, 1}, {1, 2}}, {{0, 1}}}; }

using DKind = DecompositionError::Kind;

DKind failure(const Graph& g, const TreeDecomposition& td) {
  try {
    validate_decomposition(g, td);
  } catch (const DecompositionError& e) {
    return e.kind;
  }
  FAIL("decomposition unexpectedly valid");
  return DKind::NotATree;
}

}  // namespace

TEST_CASE("validate_decomposition") {
  CHECK(validate_decomposition(c4(), c4_td()) == 2);
  CHECK(validate_decomposition(path3(), p3_td()) == 1);
  CHECK(failure(c4(), {{{0, 1}, {2, 3}}, {{0, 1}}}) == DKind::UncoveredEdge);
  CHECK(failure(path3(), {{{0, 1}}, {}}) == DKind::UncoveredVertex);
  CHECK(failure(path3(), {{{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}}}) == DKind::DisconnectedTrace);
  CHECK(failure(path3(), {{{0, 1}, {1, 2}}, {}}) == DKind::NotATree);
  CHECK(failure(path3(), {{{0, 1}, {1, 2, 2}}, {{0, 1}}}) == DKind::BadBag);
  CHECK(failure(path3(), {{{0, 1}, {1, 5}}, {{0, 1}}}) == DKind::BadBag);
}

TEST_CASE("merge_by_coloring") {
  SUBCASE("C4 merges the two color-1 vertices") {
    auto m = merge_by_coloring(c4(), c4_td(), Coloring({1, 2, 1, 2}, 2));
    CHECK(m.map.quotient_size() == 3);
    CHECK(m.map.fibers[0] == std::vector<Vertex>{0, 2});
    CHECK(m.map.pi == std::vector<Vertex>{0, 1, 0, 2});
    CHECK(m.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(m.coloring == Coloring({1, 2, 2}, 2));
    CHECK(m.width == 2);
  }
  SUBCASE("rainbow coloring: saturation only") {
    auto m = merge_by_coloring(c4(), c4_td(), Coloring({1, 2, 3, 4}, 4));
    CHECK(m.map.quotient_size() == 4);
    for (const auto& f : m.map.fibers) CHECK(f.size() == 1);
    Graph sat = c4();
    sat.add_edge(0, 2);
    CHECK(m.graph == sat);
  }
  SUBCASE("P3: ends never share a bag") {
    auto m = merge_by_coloring(path3(), p3_td(), Coloring({1, 2, 1}, 2));
    CHECK(m.graph == path3());
    CHECK(m.map.quotient_size() == 3);
  }
  CHECK_THROWS_AS(merge_by_coloring(c4(), c4_td(), Coloring({1, 1, 2, 2}, 2)), ImproperColoring);
  CHECK_THROWS_AS(merge_by_coloring(c4(), TreeDecomposition{{{0, 1}, {2, 3}}, {{0, 1}}}, Coloring({1, 2, 1, 2}, 2)),
                  DecompositionError);
}

TEST_CASE("project_coloring and expand_sequence") {
  auto m = merge_by_coloring(c4(), c4_td(), Coloring({1, 2, 1, 2}, 2));
  CHECK(project_coloring(m.map, Coloring({3, 1, 1}, 3)) == Coloring({3, 1, 3, 1}, 3));
  auto id = MergeMap::identity(3);
  CHECK(project_coloring(id, Coloring({2, 3, 1}, 3)) == Coloring({2, 3, 1}, 3));

  RecoloringSequence s2{Coloring({1, 2, 2}, 3), {{0, 3}}};
  auto s = expand_sequence(m.graph, m.map, s2);
  CHECK(s.start == Coloring({1, 2, 1, 2}, 3));
  CHECK(s.steps == std::vector<RecoloringStep>{{0, 3}, {2, 3}});
  CHECK(apply_sequence(c4(), s) == Coloring({3, 2, 3, 2}, 3));

  auto same = expand_sequence(path3(), MergeMap::identity(3), RecoloringSequence{Coloring({1, 2, 1}, 3), {{1, 3}}});
  CHECK(same.steps == std::vector<RecoloringStep>{{1, 3}});

  RecoloringSequence bad{Coloring({1, 2, 2}, 3), {{1, 1}}};
  CHECK_THROWS_AS(expand_sequence(m.graph, m.map, bad), InvalidQuotientSequence);
}

TEST_CASE("corollary pipeline") {
  Graph g = c4();
  SUBCASE("oracle bridge composes alpha to beta") {
    auto p = corollary_pipeline(g, c4_td(), Coloring({1, 2, 1, 2}, 5), Coloring({2, 1, 2, 1}, 5), 5, Bridge::Oracle);
    REQUIRE(p.composed);
    CHECK(p.bridge_available);
    CHECK(p.composed->start == Coloring({1, 2, 1, 2}, 5));
    auto end = testing::replay(g, *p.composed);
    REQUIRE(end);
    CHECK(*end == std::vector<Color>{2, 1, 2, 1});
    CHECK(per_vertex_counts(*p.composed) == p.counts);
  }
  SUBCASE("equal endpoints") {
    auto p = corollary_pipeline(g, c4_td(), Coloring({1, 2, 3, 4}, 5), Coloring({1, 2, 3, 4}, 5), 5, Bridge::Oracle);
    REQUIRE(p.composed);
    CHECK(apply_sequence(g, *p.composed) == Coloring({1, 2, 3, 4}, 5));
  }
  SUBCASE("no bridge: two halves ending at small-palette colorings") {
    auto p = corollary_pipeline(g, c4_td(), Coloring({1, 2, 1, 2}, 5), Coloring({5, 4, 3, 1}, 5), 5, Bridge::None);
    CHECK_FALSE(p.bridge_available);
    CHECK_FALSE(p.composed);
    CHECK(apply_sequence(g, p.alpha_half) == p.gamma1);
    CHECK(apply_sequence(g, p.beta_half) == p.gamma2);
    CHECK(p.gamma1.max_color() <= p.width + 1);
    CHECK(p.gamma2.max_color() <= p.width + 1);
  }
  CHECK_THROWS_AS(corollary_pipeline(g, c4_td(), Coloring({1, 2, 1, 2}, 4), Coloring({2, 1, 2, 1}, 4), 4, Bridge::None),
                  InvalidParams);
  CHECK_THROWS_AS(corollary_pipeline(g, c4_td(), Coloring({1, 2, 1, 2}, 5), Coloring({2, 1, 2, 1}, 5), 5, Bridge::Oracle, 100),
                  OracleInfeasible);
}

TEST_CASE("property: merge invariants on random bounded-treewidth graphs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto inst = gen_partial_ktree(k + 1 + static_cast<int>(seed % 9), k, 0.5, seed);
    const int t = 2 * k + 1;
    auto alpha = gen_random_coloring(inst.graph, inst.ordering, t, seed + 9);
    CAPTURE(seed);
    auto m = merge_by_coloring(inst.graph, inst.decomposition, alpha);
    CHECK(testing::chordal_by_elimination(m.graph));
    CHECK(testing::degeneracy_by_subsets(m.graph) <= k);
    CHECK(testing::proper(m.graph, m.coloring.colors));
    for (const auto& fiber : m.map.fibers) {
      for (Vertex a : fiber) {
        for (Vertex b : fiber) CHECK_FALSE(testing::adjacent(inst.graph, a, b));
      }
    }
    for (const auto& bag : m.decomposition.bags) {
      for (std::size_t i = 0; i < bag.size(); ++i) {
        for (std::size_t j = i + 1; j < bag.size(); ++j) CHECK(m.coloring[bag[i]] != m.coloring[bag[j]]);
      }
    }
    CHECK(validate_decomposition(m.graph, m.decomposition) <= k);
    CHECK(project_coloring(m.map, m.coloring) == alpha);

    // Expansion keeps per-vertex counts through pi and yields a valid sequence on G.
    auto beta2 = gen_random_coloring(m.graph, m.peo, t, seed + 11);
    auto s2 = best_choice_sequence(m.graph, m.peo, m.coloring, beta2);
    auto s = expand_sequence(m.graph, m.map, s2);
    REQUIRE(testing::replay(inst.graph, s));
    auto c2 = per_vertex_counts(s2);
    auto c = per_vertex_counts(s);
    for (Vertex u = 0; u < inst.graph.size(); ++u) CHECK(c[u] == c2[m.map.pi[u]]);
    CHECK(testing::proper(inst.graph, project_coloring(m.map, beta2).colors));
  }
}
