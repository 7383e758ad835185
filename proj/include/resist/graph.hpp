#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "resist/error.hpp"
#include "resist/vertex_id.hpp"

namespace resist {

/// Undirected edge with a positive resistance (edge length).
struct EdgeRecord {
  VertexId u;
  VertexId v;
  double resistance = 1.0;

  double conductance() const { return 1.0 / resistance; }
  /// True when both records name the same unordered pair.
  bool same_pair(const EdgeRecord& other) const {
    return (u == other.u && v == other.v) || (u == other.v && v == other.u);
  }

  bool operator==(const EdgeRecord&) const = default;
};

/// Half the sum of incident edge lengths: mu0(v) = 1/2 sum R(u,v).
struct HalfEdgeLength {};
/// mu(v) = sum C(u,v), the discrete-time random walk weight.
struct ConductanceSum {};
struct ConstantWeight {
  double value = 1.0;
};
struct ExplicitWeight {
  std::map<VertexId, double> table;
};

using VertexWeightScheme = std::variant<HalfEdgeLength, ConductanceSum, ConstantWeight, ExplicitWeight>;

/// Parses "mu0", "deg", "const:<c>".
VertexWeightScheme parse_weight_scheme(std::string_view text);
std::string describe(const VertexWeightScheme& scheme);

/// Finite simple graph with resistances and vertex weights.
///
/// Vertices are stored in a deterministic order (insertion order); every
/// vertex function on the graph is an Eigen vector indexed in that order.
class WeightedGraph {
 public:
  struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double resistance = 1.0;
    double conductance() const { return 1.0 / resistance; }
  };
  struct Incidence {
    std::size_t neighbor = 0;
    std::size_t edge = 0;
    double resistance = 1.0;
    double conductance() const { return 1.0 / resistance; }
  };

  WeightedGraph() = default;

  /// Builds from indexed parts. Rejects self loops, duplicate pairs,
  /// non-positive resistances and weights. Isolated vertices are allowed
  /// here; build_finite enforces local finiteness for user input.
  static WeightedGraph from_parts(std::vector<VertexId> ids, Eigen::VectorXd mu, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return ids_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const VertexId& id(std::size_t i) const { return ids_[i]; }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  std::optional<std::size_t> find(const VertexId& v) const;
  /// Throws UnknownVertex.
  std::size_t index_of(const VertexId& v) const;
  /// Lookup by printed form (VertexId::str()).
  std::size_t index_of_name(std::string_view name) const;

  double mu(std::size_t i) const { return mu_[i]; }
  const Eigen::VectorXd& mu() const noexcept { return mu_; }
  double total_mu() const { return mu_.sum(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Incidence>& incident(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const;

  EdgeRecord record(std::size_t edge) const;
  std::vector<EdgeRecord> edge_records() const;
  /// Resolves records to edge indices; throws EdgeNotInGraph.
  std::vector<std::size_t> resolve_edges(std::span<const EdgeRecord> records) const;

  /// Same topology, weights recomputed by the scheme.
  WeightedGraph with_weights(const VertexWeightScheme& scheme) const;
  /// Same topology and weights, new resistances (one per edge, in edge order).
  WeightedGraph with_resistances(std::span<const double> resistances) const;

 private:
  std::vector<VertexId> ids_;
  Eigen::VectorXd mu_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<VertexId, std::size_t, VertexIdHash> index_;
};

/// Weights for every vertex of an edge list under the scheme.
Eigen::VectorXd compute_weights(const std::vector<VertexId>& ids, const std::vector<WeightedGraph::Edge>& edges,
                                const VertexWeightScheme& scheme);

/// Builds a finite graph from an edge list; vertices appear in first-mention order.
WeightedGraph build_finite(std::span<const EdgeRecord> edges, const VertexWeightScheme& scheme);

/// Builds from an explicit vertex list (optional per-vertex mu) and edges.
/// Listed vertices without edges, or edge endpoints not listed, raise
/// IsolatedVertexSpecMismatch. Vertices with no explicit mu get the scheme's value.
struct VertexSpec {
  VertexId id;
  std::optional<double> mu;
};
WeightedGraph build_finite(std::span<const VertexSpec> vertices, std::span<const EdgeRecord> edges,
                           const VertexWeightScheme& scheme);

/// Sum of edge lengths.
double volume(const WeightedGraph& graph);

/// Component label per vertex (labels in first-vertex order), optionally ignoring edges.
std::vector<std::size_t> component_labels(const WeightedGraph& graph, const std::vector<bool>* removed_edges = nullptr);

}  // namespace resist
