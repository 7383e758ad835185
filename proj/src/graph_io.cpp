#include "resist/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

namespace resist {

json graph_to_json(const WeightedGraph& graph) {
  json vertices = json::array();
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    vertices.push_back({{"id", graph.id(i).str()}, {"mu", graph.mu(i)}});
  }
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back({{"u", graph.id(e.u).str()}, {"v", graph.id(e.v).str()}, {"r", e.resistance}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

WeightedGraph graph_from_json(const json& doc, const VertexWeightScheme& scheme) {
  try {
    std::vector<VertexSpec> vertices;
    std::vector<EdgeRecord> edges;
    for (const auto& v : doc.at("edges")) {
      edges.push_back({VertexId::parse(v.at("u").get<std::string>()), VertexId::parse(v.at("v").get<std::string>()),
                       v.at("r").get<double>()});
    }
    if (!doc.contains("vertices")) return build_finite(edges, scheme);
    for (const auto& v : doc.at("vertices")) {
      VertexSpec spec{VertexId::parse(v.at("id").get<std::string>()), std::nullopt};
      if (v.contains("mu") && !v.at("mu").is_null()) spec.mu = v.at("mu").get<double>();
      vertices.push_back(std::move(spec));
    }
    return build_finite(vertices, edges, scheme);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("malformed graph JSON: ") + e.what());
  }
}

WeightedGraph load_graph(const std::string& path, const VertexWeightScheme& scheme) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, path + ": " + e.what());
  }
  return graph_from_json(doc, scheme);
}

json truncation_to_json(const Truncation& truncation) {
  auto doc = graph_to_json(truncation.host);
  json frontier = json::array();
  json boundary = json::array();
  for (const auto& site : truncation.sites) {
    json entry = {{"id", truncation.host.id(site.vertex).str()}, {"class", site.point.name}};
    if (site.is_frontier()) {
      entry["ray_r"] = *site.ray_resistance;
      frontier.push_back(entry);
    } else {
      boundary.push_back(entry);
    }
  }
  doc["depth"] = truncation.depth;
  doc["frontier"] = frontier;
  doc["boundary_vertices"] = boundary;
  return doc;
}

json function_to_json(const WeightedGraph& graph, const Eigen::VectorXd& f) {
  json out = json::object();
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) out[graph.id(i).str()] = f(static_cast<Eigen::Index>(i));
  return out;
}

json cut_to_json(const CutWitness& witness) {
  json edges = json::array();
  for (const auto& e : witness.edges) edges.push_back({{"u", e.u.str()}, {"v", e.v.str()}, {"r", e.resistance}});
  return {{"edges", edges}, {"side_a", witness.side_a}, {"side_b", witness.side_b}};
}

CutWitness cut_from_json(const json& doc) {
  CutWitness w;
  try {
    for (const auto& e : doc.at("edges")) {
      w.edges.push_back({VertexId::parse(e.at("u").get<std::string>()), VertexId::parse(e.at("v").get<std::string>()),
                         e.value("r", 1.0)});
    }
    w.side_a = doc.value("side_a", std::string("A"));
    w.side_b = doc.value("side_b", std::string("B"));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("malformed cut witness: ") + e.what());
  }
  return w;
}

json flat_function_to_json(const WeightedGraph& graph, const FlatFunction& f) {
  CutWitness w{f.witness, "A", "B"};
  return {{"values", function_to_json(graph, f.values)}, {"witness", cut_to_json(w)["edges"]}};
}

json distance_to_json(const Distance& d) {
  if (!d) return "unreachable";
  return *d;
}

void write_matrix_market(std::ostream& out, const QMatrix<double>& q) {
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << q.rows() << ' ' << q.cols() << ' ' << q.nonZeros() << '\n';
  out << std::setprecision(17);
  for (Eigen::Index r = 0; r < q.outerSize(); ++r) {
    for (QMatrix<double>::InnerIterator it(q, r); it; ++it) {
      out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
    }
  }
}

}  // namespace resist
