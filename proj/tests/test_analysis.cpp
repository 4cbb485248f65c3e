#include <doctest.h>

#include <numeric>

#include "recolor/analysis.hpp"
#include "recolor/best_choice.hpp"
#include "recolor/generators.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

std::vector<RecoloringStep> steps(std::initializer_list<std::pair<int, int>> list) {
  std::vector<RecoloringStep> out;
  for (auto [v, c] : list) out.push_back({v, c});
  return out;
}

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

RecoloringSequence p3_run() {
  Graph g = path3();
  return best_choice_sequence(g, EliminationOrdering(g, {0, 1, 2}), Coloring({1, 2, 1}, 3),
                              Coloring({2, 1, 2}, 3));
}

// A sequence whose steps only spell out the given vertices.
RecoloringSequence spelled(std::vector<Vertex> vs) {
  RecoloringSequence s{Coloring(std::vector<Color>(5, 1), 9), {}};
  for (Vertex v : vs) s.steps.push_back({v, 2});
  return s;
}

}  // namespace

TEST_CASE("restrict_sequence") {
  auto s = p3_run();
  std::vector<Vertex> mid{1};
  CHECK(restrict_sequence(s, mid).steps == steps({{1, 3}, {1, 1}}));
  std::vector<Vertex> all{0, 1, 2};
  CHECK(restrict_sequence(s, all) == s);
  CHECK(restrict_sequence(s, std::vector<Vertex>{}).empty());
}

TEST_CASE("count_pattern counts overlapping copies") {
  std::vector<Vertex> aba{0, 1, 0}, aa{0, 0}, longer{0, 1, 0, 1, 0, 1};
  CHECK(count_pattern(spelled({0, 1, 0, 1, 0}), aba) == 2);
  CHECK(count_pattern(spelled({0, 1, 0, 1, 0}), longer) == 0);
  CHECK(count_pattern(spelled({0, 0, 0}), aa) == 2);
  CHECK(count_pattern(spelled({0, 0}), std::vector<Vertex>{}) == 0);
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<Vertex> pat(k, 3);
      CHECK(count_pattern(spelled(std::vector<Vertex>(n, 3)), pat) == static_cast<std::size_t>(n - k + 1));
    }
  }
}

TEST_CASE("caused_by") {
  Graph g = path3();
  auto s = p3_run();
  CHECK(caused_by(g, s, 0) == std::optional<Vertex>(0));
  CHECK_FALSE(caused_by(g, s, 3));
  CHECK_THROWS_AS(caused_by(g, s, 4), std::out_of_range);
  // Vertices 0 and 2 are not adjacent; the second step takes the first's old color.
  RecoloringSequence apart{Coloring({1, 2, 1}, 3), steps({{0, 3}, {2, 3}})};
  CHECK_FALSE(caused_by(g, apart, 0));
  RecoloringSequence far{Coloring({1, 2, 3}, 4), steps({{0, 4}, {2, 1}})};
  CHECK_FALSE(caused_by(g, far, 0));
}

TEST_CASE("tight recolorings") {
  Graph g = triangle();
  EliminationOrdering ord(g, {0, 1, 2});
  Coloring start({1, 2, 3}, 5);
  RecoloringSequence vabv{start, steps({{2, 4}, {0, 3}, {1, 5}, {2, 1}})};
  CHECK(tight_recolorings(vabv, ord, 2) == std::vector<std::size_t>{0});
  RecoloringSequence vav{start, steps({{2, 4}, {0, 3}, {2, 5}})};
  CHECK(tight_recolorings(vav, ord, 2).empty());
  RecoloringSequence v{start, steps({{2, 4}})};
  CHECK(tight_recolorings(v, ord, 2).empty());
}

TEST_CASE("saved steps and the save inequality") {
  Graph g = path3();
  EliminationOrdering ord(g, {0, 1, 2});
  auto s = p3_run();
  CHECK(saved_steps(s, ord, 1).empty());
  auto mid = check_save_inequality(s, ord, 1);
  CHECK(mid.count == 2);
  CHECK(mid.back_sum == 1);
  CHECK(mid.saved == 0);
  CHECK(mid.bound == 2);
  CHECK(mid.holds());
  auto last = check_save_inequality(s, ord, 2);
  CHECK(last.count == 1);
  CHECK(last.back_sum == 2);
  CHECK(last.holds());

  Graph k3 = triangle();
  EliminationOrdering kord(k3, {0, 1, 2});
  Coloring start({1, 2, 3}, 5);
  SUBCASE("v never recolored: every back step saved") {
    RecoloringSequence only_back{start, steps({{0, 4}, {1, 5}, {0, 1}})};
    CHECK(saved_steps(only_back, kord, 2) == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("back steps after the last v are saved") {
    RecoloringSequence tail{start, steps({{2, 4}, {0, 3}, {1, 5}})};
    CHECK(saved_steps(tail, kord, 2) == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("hand-built violation") {
    RecoloringSequence many{start, steps({{2, 4}, {2, 5}, {2, 4}})};
    CHECK_FALSE(check_save_inequality(many, kord, 2).holds());
  }
}

TEST_CASE("observation 1") {
  Graph g = path3();
  EliminationOrdering ord(g, {0, 1, 2});
  CHECK(check_observation1(p3_run(), ord).empty());

  Graph pair(2);
  EliminationOrdering pord(pair, {0, 1});
  RecoloringSequence vv{Coloring({1, 1}, 3), steps({{1, 2}, {1, 3}})};
  auto flagged = check_observation1(vv, pord);
  REQUIRE(flagged.size() == 1);
  CHECK(flagged[0].check == "observation1_vv");
  CHECK(flagged[0].vertex == 1);

  CHECK(check_observation1(RecoloringSequence{Coloring({1, 1}, 3), {}}, pord).empty());

  SUBCASE("short gap allowed only before the last recoloring") {
    Graph k3 = triangle();
    EliminationOrdering kord(k3, {0, 1, 2});
    Coloring start({1, 2, 3}, 5);
    RecoloringSequence ok{start, steps({{2, 4}, {0, 3}, {2, 5}})};
    CHECK(check_observation1(ok, kord).empty());
    RecoloringSequence bad{start, steps({{2, 4}, {0, 3}, {2, 5}, {0, 4}, {1, 1}, {2, 2}})};
    // Vertex 0 has no back-neighbors, so its two steps also form a vv pattern.
    auto v = check_observation1(bad, kord);
    REQUIRE(v.size() == 2);
    CHECK(v[0].check == "observation1_vv");
    CHECK(v[0].vertex == 0);
    CHECK(v[1].check == "observation1_short_gap");
    CHECK(v[1].vertex == 2);
  }
}

TEST_CASE("observation 2") {
  Graph k3 = triangle();
  EliminationOrdering kord(k3, {0, 1, 2});
  // d=2, t=5. v=2 starts at 3, neighbors at 1,2.
  SUBCASE("vacuous without tight recolorings") {
    RecoloringSequence none{Coloring({1, 2, 3}, 5), steps({{2, 4}})};
    auto r = check_observation2(none, kord, 2);
    CHECK(r.checked == 0);
    CHECK(r.violations.empty());
  }
  SUBCASE("coverage holds") {
    // v: 3 -> 4 (c0=3, c1..c2 = 1,2, x=4); gap steps (0,3) (1,5); v -> 1.
    RecoloringSequence s{Coloring({1, 2, 3}, 5), steps({{2, 4}, {0, 3}, {1, 5}, {2, 1}, {0, 2}})};
    auto r = check_observation2(s, kord, 2);
    CHECK(r.checked == 1);
    CHECK(r.violations.empty());
    CHECK(r.literal_mismatches == 1);
  }
  SUBCASE("coverage fails") {
    // Second gap color repeats an earlier color, so 5 is missing.
    RecoloringSequence s{Coloring({1, 2, 3}, 5), steps({{2, 4}, {0, 3}, {1, 1}, {2, 2}, {0, 4}})};
    auto r = check_observation2(s, kord, 2);
    CHECK(r.checked == 1);
    CHECK(r.violations.size() == 1);
  }
  SUBCASE("follower is the last step: exempt") {
    RecoloringSequence s{Coloring({1, 2, 3}, 5), steps({{2, 4}, {0, 3}, {1, 1}, {2, 2}})};
    auto r = check_observation2(s, kord, 2);
    CHECK(r.checked == 0);
    CHECK(r.violations.empty());
  }
  CHECK_THROWS_AS(check_observation2(RecoloringSequence{Coloring({1, 2, 3}, 6), {}}, kord, 2), InvalidParams);
}

TEST_CASE("rotating recolorings") {
  Graph one(1);
  RecoloringSequence rot{Coloring({1}, 5), steps({{0, 5}, {0, 3}, {0, 1}})};
  CHECK(rotating_recolorings(rot, 0) == std::vector<std::size_t>{0});
  RecoloringSequence flat{Coloring({1}, 5), steps({{0, 5}, {0, 3}, {0, 2}})};
  CHECK(rotating_recolorings(flat, 0).empty());
  RecoloringSequence shortseq{Coloring({1}, 5), steps({{0, 5}, {0, 1}})};
  CHECK(rotating_recolorings(shortseq, 0).empty());
}

TEST_CASE("naughty recolorings") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
  std::vector<Vertex> x{0, 1};
  RecoloringSequence quiet{Coloring({1, 2, 1}, 7), steps({{0, 3}, {1, 4}, {0, 1}})};
  CHECK(naughty_recolorings(quiet, g, x, 3) == std::vector<std::size_t>{0, 1, 2});

  RecoloringSequence busy{Coloring({1, 2, 1}, 7), steps({{0, 3}, {1, 4}, {0, 5}, {1, 6}, {0, 7}})};
  auto hits = naughty_recolorings(busy, g, x, 3);
  CHECK(std::find(hits.begin(), hits.end(), 0) == hits.end());

  SUBCASE("causation inside the window blocks") {
    // Step 2 (vertex 1 -> 3) takes the color vertex 0 had before step 1.
    RecoloringSequence caused{Coloring({1, 2, 1}, 7), steps({{0, 3}, {0, 4}, {1, 3}})};
    auto h = naughty_recolorings(caused, g, x, 3);
    CHECK(std::find(h.begin(), h.end(), 0) == h.end());
  }
  SUBCASE("windows are parameters") {
    auto narrow = naughty_recolorings(busy, g, x, 3, NaughtyWindows{1, 0});
    CHECK(std::find(narrow.begin(), narrow.end(), 0) != narrow.end());
  }
  std::vector<Vertex> wrong{0};
  CHECK_THROWS_AS(naughty_recolorings(quiet, g, wrong, 3), InvalidParams);
  std::vector<Vertex> apart{0, 2};
  CHECK_THROWS_AS(naughty_recolorings(quiet, g, apart, 3), InvalidParams);
}

TEST_CASE("per-vertex counts and bounds") {
  CHECK(per_vertex_counts(p3_run()) == std::vector<std::size_t>{1, 2, 1});
  CHECK(per_vertex_counts(RecoloringSequence{Coloring({1, 2}, 2), {}}) == std::vector<std::size_t>{0, 0});
  CHECK(recoloring_bound(1) == 262144.0);
  CHECK(recoloring_bound(2) == 262144.0 * 128);
  CHECK(naughty_threshold(2) == (2 - 1) * recoloring_bound(2) - 160 * 8 - 1);
}

TEST_CASE("analyze on the worked example") {
  Graph g = path3();
  EliminationOrdering ord(g, {0, 1, 2});
  auto report = analyze(g, ord, p3_run());
  CHECK(report.ok());
  CHECK(report.max_count == 2);
  CHECK(report.per_vertex_counts == std::vector<std::size_t>{1, 2, 1});
  CHECK(report.histogram == std::map<std::size_t, std::size_t>{{1, 2}, {2, 1}});
  CHECK(report.statistics.at("length") == 4);
}

TEST_CASE("property: proof invariants on engine outputs with t >= 2d+1") {
  std::size_t obs2_checked = 0, tight_total = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int d = 1 + static_cast<int>(seed % 3);
    auto inst = seed % 2 ? gen_chordal(8 + seed % 25, d, seed) : gen_ktree(d + 1 + seed % 25, d, seed);
    const int dd = inst.ordering.max_back_degree();
    const int t = 2 * dd + 1 + static_cast<int>(seed % 3 == 0);
    if (t < 2) continue;
    auto a = gen_random_coloring(inst.graph, inst.ordering, t, seed + 1);
    auto b = gen_random_coloring(inst.graph, inst.ordering, t, seed + 2);
    auto s = best_choice_sequence(inst.graph, inst.ordering, a, b);
    CAPTURE(seed);
    AnalysisOptions opts;
    opts.naughty = true;
    auto report = analyze(inst.graph, inst.ordering, s, opts);
    for (const auto& v : report.violations) {
      CAPTURE(v.check);
      CAPTURE(v.vertex);
      CHECK(false);
    }
    obs2_checked += static_cast<std::size_t>(report.statistics["obs2_checked"]);

    // Detectors are functions of the neighborhood restriction alone.
    for (Vertex v = 0; v < inst.graph.size(); ++v) {
      auto nb = closed_back_neighborhood(inst.ordering, v);
      auto r = restrict_sequence(s, nb);
      CHECK(tight_recolorings(r, inst.ordering, v) == tight_recolorings(s, inst.ordering, v));
      CHECK(saved_steps(r, inst.ordering, v) == saved_steps(s, inst.ordering, v));
      tight_total += tight_recolorings(s, inst.ordering, v).size();
      // Caused-by inside S|N^-[v]: every recoloring of v but the last is caused.
      std::vector<std::size_t> mine;
      for (std::size_t i = 0; i < r.steps.size(); ++i) {
        if (r.steps[i].vertex == v) mine.push_back(i);
      }
      for (std::size_t j = 0; j + 1 < mine.size(); ++j) CHECK(caused_by(inst.graph, r, mine[j]).has_value());
    }
    std::size_t total = 0;
    for (auto c : per_vertex_counts(s)) total += c;
    CHECK(total == s.size());
  }
  CHECK(tight_total > 0);
  CHECK(obs2_checked > 0);
}

TEST_CASE("below 2d+1 the proof invariants can fail (known, forced)") {
  // K3 at t = d+2 = 4: only one color is valid at each insertion for vertex 2.
  Graph k3 = triangle();
  EliminationOrdering ord(k3, {0, 1, 2});
  auto s = best_choice_sequence(k3, ord, Coloring({1, 2, 3}, 4), Coloring({3, 4, 2}, 4));
  CHECK(s.steps == steps({{2, 4}, {0, 3}, {2, 1}, {1, 4}, {2, 2}}));
  CHECK_FALSE(check_observation1(s, ord).empty());
  CHECK_FALSE(check_save_inequality(s, ord, 2).holds());
}
