#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "recolor/analysis.hpp"
#include "recolor/graph.hpp"
#include "recolor/sequence.hpp"
#include "recolor/treewidth.hpp"

namespace recolor {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Plain text graphs: "n m" then m lines "u v", ids from 0. Lines starting
// with '#' are skipped.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

// JSON graphs: {"n": 3, "adj": [[1], [0, 2], [1]]} or {"n": 3, "edges": [[0,1],[1,2]]}.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// Reads a graph file; JSON when the name ends in .json, text otherwise.
Graph load_graph(const std::string& path);

/// Colorings are JSON arrays of colors, or {"palette": t, "colors": [...]}.
/// A bare array takes `palette`, or its largest color when palette <= 0.
json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& j, int palette = 0);
Coloring load_coloring(const std::string& path, int palette = 0);

json sequence_to_json(const RecoloringSequence& s);
RecoloringSequence sequence_from_json(const json& j);

json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const json& j);

json ordering_to_json(const EliminationOrdering& ord);
EliminationOrdering ordering_from_json(const Graph& g, const json& j);

json report_to_json(const AnalysisReport& r);
void write_report_csv(std::ostream& out, const AnalysisReport& r);

json pipeline_to_json(const PipelineResult& p);

json read_json_file(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace recolor
