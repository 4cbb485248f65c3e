#include "recolor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace recolor {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> bfs(const StateSpace& space, std::uint64_t source,
                               std::vector<std::uint64_t>* parent = nullptr,
                               std::uint64_t stop_at = std::numeric_limits<std::uint64_t>::max()) {
  std::vector<std::uint32_t> dist(space.num_codes(), kUnseen);
  if (parent) parent->assign(space.num_codes(), 0);
  std::deque<std::uint64_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::uint64_t cur = queue.front();
    queue.pop_front();
    if (cur == stop_at) break;
    space.for_each_neighbor(cur, [&](std::uint64_t next, Vertex, Color) {
      if (dist[next] != kUnseen) return;
      dist[next] = dist[cur] + 1;
      if (parent) (*parent)[next] = cur;
      queue.push_back(next);
    });
  }
  return dist;
}

}  // namespace

StateSpace::StateSpace(const Graph& g, int t, std::uint64_t cap) : g_(&g), t_(t) {
  if (t < 1) throw InvalidParams("palette must be positive");
  const double total = std::pow(static_cast<double>(t), g.size());
  if (total > static_cast<double>(cap)) throw StateCapExceeded(total, cap);
  weight_.resize(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    weight_[v] = codes_;
    codes_ *= static_cast<std::uint64_t>(t);
  }
}

std::uint64_t StateSpace::encode(const Coloring& c) const {
  if (c.size() != g_->size()) throw InvalidParams("coloring does not cover the graph");
  std::uint64_t code = 0;
  for (Vertex v = 0; v < c.size(); ++v) {
    if (c[v] < 1 || c[v] > t_) throw PaletteError(v, c[v], t_);
    code += static_cast<std::uint64_t>(c[v] - 1) * weight_[v];
  }
  return code;
}

Coloring StateSpace::decode(std::uint64_t code) const {
  Coloring c(std::vector<Color>(g_->size()), t_);
  for (Vertex v = 0; v < g_->size(); ++v) {
    c[v] = static_cast<Color>(code % t_) + 1;
    code /= t_;
  }
  return c;
}

bool StateSpace::is_state(std::uint64_t code) const {
  Coloring c = decode(code);
  for (Vertex u = 0; u < g_->size(); ++u) {
    for (Vertex w : g_->neighbors(u)) {
      if (c[u] == c[w]) return false;
    }
  }
  return true;
}

void StateSpace::for_each_neighbor(
    std::uint64_t code, const std::function<void(std::uint64_t, Vertex, Color)>& visit) const {
  Coloring c = decode(code);
  std::vector<char> blocked(t_ + 1, 0);
  for (Vertex v = 0; v < g_->size(); ++v) {
    for (Vertex w : g_->neighbors(v)) blocked[c[w]] = 1;
    for (Color x = 1; x <= t_; ++x) {
      if (x == c[v] || blocked[x]) continue;
      std::uint64_t next = code - static_cast<std::uint64_t>(c[v] - 1) * weight_[v] +
                           static_cast<std::uint64_t>(x - 1) * weight_[v];
      visit(next, v, x);
    }
    for (Vertex w : g_->neighbors(v)) blocked[c[w]] = 0;
  }
}

std::size_t StateSpace::degree(std::uint64_t code) const {
  std::size_t deg = 0;
  for_each_neighbor(code, [&](std::uint64_t, Vertex, Color) { ++deg; });
  return deg;
}

std::uint64_t enumerate_colorings(const Graph& g, int t, std::uint64_t cap,
                                  const std::function<void(const Coloring&)>& visit) {
  const double total = std::pow(static_cast<double>(t), g.size());
  if (total > static_cast<double>(cap)) throw StateCapExceeded(total, cap);
  const int n = g.size();
  Coloring c(std::vector<Color>(n, 0), t);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      ++count;
      if (visit) visit(c);
      return;
    }
    for (Color x = 1; x <= t; ++x) {
      bool ok = true;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && c[w] == x) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      c[v] = x;
      self(self, v + 1);
    }
    c[v] = 0;
  };
  rec(rec, 0);
  return count;
}

std::optional<RecoloringSequence> rt_shortest_path(const Graph& g, int t, const Coloring& a,
                                                   const Coloring& b, std::uint64_t cap) {
  StateSpace space(g, t, cap);
  Coloring ca = a, cb = b;
  ca.palette = cb.palette = t;
  require_proper(g, ca, "source coloring");
  require_proper(g, cb, "target coloring");
  const std::uint64_t src = space.encode(ca), dst = space.encode(cb);
  std::vector<std::uint64_t> parent;
  auto dist = bfs(space, src, &parent, dst);
  if (dist[dst] == kUnseen) return std::nullopt;

  std::vector<std::uint64_t> chain{dst};
  while (chain.back() != src) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  RecoloringSequence path{ca, {}};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    Coloring before = space.decode(chain[i - 1]), after = space.decode(chain[i]);
    for (Vertex v = 0; v < g.size(); ++v) {
      if (before[v] != after[v]) {
        path.steps.push_back({v, after[v]});
        break;
      }
    }
  }
  return path;
}

std::optional<std::size_t> rt_distance(const Graph& g, int t, const Coloring& a, const Coloring& b,
                                       std::uint64_t cap) {
  auto path = rt_shortest_path(g, t, a, b, cap);
  if (!path) return std::nullopt;
  return path->size();
}

MixingReport rt_components(const Graph& g, int t, std::uint64_t cap) {
  StateSpace space(g, t, cap);
  MixingReport report;
  std::vector<char> seen(space.num_codes(), 0);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t code = 0; code < space.num_codes(); ++code) {
    if (seen[code] || !space.is_state(code)) continue;
    ++report.components;
    seen[code] = 1;
    queue.push_back(code);
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      ++report.states;
      std::size_t deg = 0;
      space.for_each_neighbor(cur, [&](std::uint64_t next, Vertex, Color) {
        ++deg;
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      });
      if (deg == 0) ++report.frozen;
    }
  }
  return report;
}

std::optional<std::size_t> rt_diameter(const Graph& g, int t, std::uint64_t cap) {
  if (!rt_components(g, t, cap).connected()) return std::nullopt;
  StateSpace space(g, t, cap);
  std::size_t diameter = 0;
  for (std::uint64_t code = 0; code < space.num_codes(); ++code) {
    if (!space.is_state(code)) continue;
    auto dist = bfs(space, code);
    for (std::uint32_t x : dist) {
      if (x != kUnseen) diameter = std::max<std::size_t>(diameter, x);
    }
  }
  return diameter;
}

bool is_frozen(const Graph& g, const Coloring& c) {
  std::vector<char> blocked(c.palette + 1, 0);
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex w : g.neighbors(v)) blocked[c[w]] = 1;
    bool stuck = true;
    for (Color x = 1; x <= c.palette && stuck; ++x) stuck = x == c[v] || blocked[x];
    for (Vertex w : g.neighbors(v)) blocked[c[w]] = 0;
    if (!stuck) return false;
  }
  return true;
}

}  // namespace recolor
