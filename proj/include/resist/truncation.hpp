#pragma once

#include <optional>
#include <vector>

#include "resist/boundary.hpp"
#include "resist/graph.hpp"
#include "resist/source.hpp"

namespace resist {

/// Boundary site of a truncation: a frontier vertex tagged with the ray
/// class through it, or a degree-one (boundary) vertex of the host.
struct BoundarySite {
  std::size_t vertex = 0;
  BoundaryPoint point;
  /// Resistance of the truncated ray edge leaving a frontier vertex.
  std::optional<double> ray_resistance;

  bool is_frontier() const { return ray_resistance.has_value(); }
};

/// Finite window onto a source: the host graph within `depth` hops of the root.
struct Truncation {
  WeightedGraph host;
  int depth = 0;
  std::vector<BoundarySite> sites;
  bool acyclic = false;

  /// Site index per host vertex (nullopt for interior vertices).
  std::vector<std::optional<std::size_t>> site_of;

  std::vector<std::size_t> frontier_vertices() const;
  /// Vertices that are neither frontier nor boundary vertices.
  std::vector<std::size_t> interior_vertices() const;
  bool is_site(std::size_t v) const { return site_of[v].has_value(); }
};

struct TruncateOptions {
  /// Merge interchangeable pendant families (see GraphSource::lumped_neighbors).
  bool lump_leaves = false;
};

/// Breadth-first truncation to `depth` hops. Throws BadDepth for depth < 1.
Truncation truncate(const GraphSource& source, int depth, const VertexWeightScheme& scheme,
                    TruncateOptions options = {});

/// Whole finite graph as a truncation: degree-one vertices are the boundary.
Truncation whole_graph(WeightedGraph graph);

/// Rebuilds the site table after the sites list was edited by hand.
void index_sites(Truncation& truncation);

}  // namespace resist
