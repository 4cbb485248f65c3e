#include "recolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace recolor {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidParams(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidParams(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParams("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InvalidParams(path + ": " + e.what());
  }
}

Graph read_graph_text(std::istream& in) {
  std::string line;
  std::vector<long long> nums;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    long long x;
    while (ls >> x) nums.push_back(x);
    if (!ls.eof()) throw InvalidParams("graph text: unexpected token in '" + line + "'");
  }
  if (nums.size() < 2) throw InvalidParams("graph text: missing 'n m' header");
  const long long n = nums[0], m = nums[1];
  if (n < 0 || m < 0) throw InvalidParams("graph text: negative header");
  if (nums.size() != static_cast<std::size_t>(2 + 2 * m)) {
    throw InvalidParams("graph text: expected " + std::to_string(m) + " edges");
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    g.add_edge(static_cast<Vertex>(nums[2 + 2 * i]), static_cast<Vertex>(nums[3 + 2 * i]));
  }
  return g;
}

void write_graph_text(std::ostream& out, const Graph& g) {
  out << g.size() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

json graph_to_json(const Graph& g) {
  json adj = json::array();
  for (Vertex v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
  return {{"n", g.size()}, {"adj", adj}};
}

Graph graph_from_json(const json& j) {
  const int n = field<int>(j, "n");
  if (n < 0) throw InvalidParams("graph: negative n");
  Graph g(n);
  if (j.contains("edges")) {
    for (const auto& e : field<std::vector<std::pair<int, int>>>(j, "edges")) g.add_edge(e.first, e.second);
    return g;
  }
  auto adj = field<std::vector<std::vector<int>>>(j, "adj");
  if (static_cast<int>(adj.size()) != n) throw InvalidParams("graph: adj has the wrong length");
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : adj[v]) {
      if (w < 0 || w >= n) throw InvalidParams("graph: neighbor out of range");
      if (std::find(adj[w].begin(), adj[w].end(), v) == adj[w].end()) {
        throw InvalidParams("graph: adjacency is not symmetric at " + std::to_string(v) + "-" +
                            std::to_string(w));
      }
      g.add_edge(v, w);
    }
  }
  return g;
}

Graph load_graph(const std::string& path) {
  if (ends_with(path, ".json")) return graph_from_json(read_json_file(path));
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open " + path);
  return read_graph_text(in);
}

json coloring_to_json(const Coloring& c) { return {{"palette", c.palette}, {"colors", c.colors}}; }

Coloring coloring_from_json(const json& j, int palette) {
  std::vector<Color> colors;
  if (j.is_array()) {
    try {
      colors = j.get<std::vector<Color>>();
    } catch (const json::exception& e) {
      throw InvalidParams(std::string("coloring: ") + e.what());
    }
  } else {
    colors = field<std::vector<Color>>(j, "colors");
    if (palette <= 0) palette = field<int>(j, "palette");
  }
  if (palette <= 0) {
    palette = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
  }
  return Coloring(std::move(colors), palette);
}

Coloring load_coloring(const std::string& path, int palette) {
  return coloring_from_json(read_json_file(path), palette);
}

json sequence_to_json(const RecoloringSequence& s) {
  json steps = json::array();
  for (auto [v, c] : s.steps) steps.push_back({v, c});
  return {{"palette", s.start.palette}, {"start", s.start.colors}, {"steps", steps}};
}

RecoloringSequence sequence_from_json(const json& j) {
  RecoloringSequence s;
  s.start = Coloring(field<std::vector<Color>>(j, "start"), field<int>(j, "palette"));
  for (const auto& [v, c] : field<std::vector<std::pair<int, int>>>(j, "steps")) s.steps.push_back({v, c});
  return s;
}

json decomposition_to_json(const TreeDecomposition& td) {
  json edges = json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  return {{"bags", td.bags}, {"tree_edges", edges}};
}

TreeDecomposition decomposition_from_json(const json& j) {
  TreeDecomposition td;
  td.bags = field<std::vector<std::vector<Vertex>>>(j, "bags");
  td.tree_edges = field<std::vector<std::pair<int, int>>>(j, "tree_edges");
  return td;
}

json ordering_to_json(const EliminationOrdering& ord) {
  json back = json::array();
  for (Vertex v = 0; v < ord.size(); ++v) back.push_back(ord.back_neighbors(v));
  return {{"order", ord.order()}, {"max_back_degree", ord.max_back_degree()}, {"back_neighbors", back}};
}

EliminationOrdering ordering_from_json(const Graph& g, const json& j) {
  std::vector<Vertex> order = j.is_array() ? j.get<std::vector<Vertex>>() : field<std::vector<Vertex>>(j, "order");
  return EliminationOrdering(g, std::move(order));
}

json report_to_json(const AnalysisReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"check", v.check}, {"vertex", v.vertex}, {"steps", v.steps}});
  }
  json histogram = json::object();
  for (auto [count, vertices] : r.histogram) histogram[std::to_string(count)] = vertices;
  json vertices = json::array();
  for (const auto& v : r.vertices) {
    vertices.push_back({{"vertex", v.vertex},
                        {"count", v.count},
                        {"back_degree", v.back_degree},
                        {"tight", v.tight},
                        {"saved", v.saved},
                        {"rotating", v.rotating},
                        {"save_bound", v.save_bound}});
  }
  return {{"schema_version", kSchemaVersion},
          {"ok", r.ok()},
          {"max_count", r.max_count},
          {"per_vertex_counts", r.per_vertex_counts},
          {"histogram", histogram},
          {"statistics", r.statistics},
          {"violations", violations},
          {"vertices", vertices}};
}

void write_report_csv(std::ostream& out, const AnalysisReport& r) {
  out << "schema_version,vertex,count,back_degree,tight,saved,rotating,save_bound\n";
  for (const auto& v : r.vertices) {
    out << kSchemaVersion << ',' << v.vertex << ',' << v.count << ',' << v.back_degree << ',' << v.tight
        << ',' << v.saved << ',' << v.rotating << ',' << v.save_bound << '\n';
  }
}

json pipeline_to_json(const PipelineResult& p) {
  json out = {{"schema_version", kSchemaVersion},
              {"width", p.width},
              {"alpha_half", sequence_to_json(p.alpha_half)},
              {"beta_half", sequence_to_json(p.beta_half)},
              {"gamma1", p.gamma1.colors},
              {"gamma2", p.gamma2.colors},
              {"bridge_available", p.bridge_available},
              {"counts", p.counts}};
  out["bridge"] = p.bridge ? sequence_to_json(*p.bridge) : json(nullptr);
  out["composed"] = p.composed ? sequence_to_json(*p.composed) : json(nullptr);
  std::size_t max_count = 0;
  for (auto c : p.counts) max_count = std::max(max_count, c);
  out["max_count"] = max_count;
  return out;
}

}  // namespace recolor
