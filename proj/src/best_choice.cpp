#include "recolor/best_choice.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace recolor {

namespace {

constexpr int kNever = std::numeric_limits<int>::max();

// `first_use(c)` is the position of the first future occurrence of c, or kNever.
// `valid` must be sorted ascending.
template <typename FirstUse>
BestChoice choose(Color target, std::span<const Color> valid, FirstUse first_use) {
  if (valid.empty()) throw EmptyValidSet(-1, -1);
  const bool target_valid = std::binary_search(valid.begin(), valid.end(), target);
  const bool target_later = first_use(target) != kNever;
  if (target_valid && !target_later) return {target, ChoiceRule::Target, false};
  const bool blocked = !target_valid && !target_later;

  for (Color c : valid) {
    if (first_use(c) == kNever) return {c, ChoiceRule::Unused, blocked};
  }
  // Every valid color occurs later; positions hold one color each, so the
  // latest first occurrence is unique.
  Color best = valid.front();
  for (Color c : valid) {
    if (first_use(c) > first_use(best)) best = c;
  }
  return {best, ChoiceRule::LatestFirstUse, blocked};
}

}  // namespace

BestChoice best_choice(Color target, std::span<const Color> valid, std::span<const Color> future) {
  std::vector<Color> sorted(valid.begin(), valid.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto first_use = [&](Color c) {
    auto it = std::find(future.begin(), future.end(), c);
    return it == future.end() ? kNever : static_cast<int>(it - future.begin());
  };
  return choose(target, sorted, first_use);
}

void EngineStats::record(const BestChoice& choice) {
  switch (choice.rule) {
    case ChoiceRule::Target: ++by_target; break;
    case ChoiceRule::Unused: ++by_unused; break;
    case ChoiceRule::LatestFirstUse: ++by_latest; break;
  }
  if (choice.target_blocked) ++target_blocked;
}

EngineStats& EngineStats::operator+=(const EngineStats& o) {
  by_target += o.by_target;
  by_unused += o.by_unused;
  by_latest += o.by_latest;
  target_blocked += o.target_blocked;
  closing_steps += o.closing_steps;
  return *this;
}

RecoloringSequence local_best_choice(const Graph& g, Vertex u, std::span<const Vertex> nbrs,
                                     const RecoloringSequence& s, Color alpha_u, Color beta_u,
                                     EngineStats* stats) {
  const int n = g.size();
  const int t = s.palette();
  if (!g.contains(u)) throw InvalidParams("vertex " + std::to_string(u) + " out of range");
  if (s.start.size() != n) throw InvalidParams("start coloring does not cover the graph");
  if (alpha_u < 1 || alpha_u > t) throw PaletteError(u, alpha_u, t);
  if (beta_u < 1 || beta_u > t) throw PaletteError(u, beta_u, t);

  std::vector<char> is_nbr(n, 0);
  for (Vertex w : nbrs) {
    if (!g.contains(w) || w == u) throw InvalidParams("bad neighbor " + std::to_string(w));
    is_nbr[w] = 1;
  }

  // New colors of the neighbor steps, in order.
  std::vector<Color> nbr_colors;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    auto [v, c] = s.steps[i];
    if (v == u || !g.contains(v) || c < 1 || c > t) {
      throw SequenceError(SequenceError::Kind::BadStep, static_cast<std::int64_t>(i), v, c,
                          "base sequence step " + std::to_string(i) + " is invalid for vertex " +
                              std::to_string(u));
    }
    if (is_nbr[v]) nbr_colors.push_back(c);
  }

  // first[j * width + c]: first position >= j of color c among neighbor steps.
  const std::size_t width = static_cast<std::size_t>(t) + 1;
  const std::size_t len = nbr_colors.size();
  std::vector<int> first((len + 1) * width, kNever);
  for (std::size_t j = len; j-- > 0;) {
    std::copy_n(first.begin() + (j + 1) * width, width, first.begin() + j * width);
    first[j * width + nbr_colors[j]] = static_cast<int>(j);
  }

  RecoloringSequence out;
  out.start = s.start;
  out.start[u] = alpha_u;
  out.steps.reserve(s.steps.size() + 8);

  std::vector<Color> cur = s.start.colors;
  std::vector<char> blocked(width + 1, 0);
  std::vector<Color> valid;
  Color ucolor = alpha_u;
  std::size_t j = 0;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    auto [v, c] = s.steps[i];
    if (is_nbr[v]) {
      if (c == ucolor) {
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[ucolor] = 1;
        for (Vertex w : nbrs) blocked[cur[w]] = 1;
        valid.clear();
        for (Color x = 1; x <= t; ++x) {
          if (!blocked[x]) valid.push_back(x);
        }
        if (valid.empty()) throw EmptyValidSet(u, static_cast<std::int64_t>(i));
        const int* row = first.data() + j * width;
        auto first_use = [&](Color x) { return x >= 1 && x <= t ? row[x] : kNever; };
        BestChoice choice = choose(beta_u, valid, first_use);
        if (stats) stats->record(choice);
        out.steps.push_back({u, choice.color});
        ucolor = choice.color;
      }
      ++j;
    }
    cur[v] = c;
    out.steps.push_back({v, c});
  }
  if (ucolor != beta_u) {
    out.steps.push_back({u, beta_u});
    if (stats) ++stats->closing_steps;
  }
  return out;
}

RecoloringSequence best_choice_sequence(const Graph& g, const EliminationOrdering& ord,
                                        const Coloring& alpha, const Coloring& beta,
                                        EngineStats* stats, int stages) {
  if (ord.size() != g.size()) throw InvalidParams("ordering does not match graph");
  if (alpha.palette != beta.palette) throw InvalidParams("alpha and beta use different palettes");
  require_proper(g, alpha, "alpha");
  require_proper(g, beta, "beta");
  const int upto = stages < 0 ? g.size() : std::min(stages, g.size());

  RecoloringSequence s{alpha, {}};
  for (int i = 0; i < upto; ++i) {
    Vertex v = ord.at(i);
    s = local_best_choice(g, v, ord.back_neighbors(v), s, alpha[v], beta[v], stats);
  }
  return s;
}

}  // namespace recolor
