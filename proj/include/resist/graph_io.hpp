#pragma once

#include <iosfwd>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <json.hpp>

#include "resist/forms.hpp"
#include "resist/graph.hpp"
#include "resist/metric.hpp"
#include "resist/truncation.hpp"

namespace resist {

using json = nlohmann::json;

/// {"vertices": [{"id": s, "mu": x}], "edges": [{"u": s, "v": s, "r": x}]}
json graph_to_json(const WeightedGraph& graph);
/// Missing per-vertex mu values come from `scheme`.
WeightedGraph graph_from_json(const json& doc, const VertexWeightScheme& scheme);
WeightedGraph load_graph(const std::string& path, const VertexWeightScheme& scheme);

/// Graph JSON plus a "frontier" list of {"id", "class"} and "depth".
json truncation_to_json(const Truncation& truncation);

/// {vertexId: value}
json function_to_json(const WeightedGraph& graph, const Eigen::VectorXd& f);
json cut_to_json(const CutWitness& witness);
CutWitness cut_from_json(const json& doc);
json flat_function_to_json(const WeightedGraph& graph, const FlatFunction& f);

/// Distance as a number, or the string "unreachable".
json distance_to_json(const Distance& d);

/// Matrix Market coordinate real general, 1-based, rows/columns in host order.
void write_matrix_market(std::ostream& out, const QMatrix<double>& q);

}  // namespace resist
