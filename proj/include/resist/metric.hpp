#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "resist/boundary.hpp"
#include "resist/graph.hpp"
#include "resist/source.hpp"

namespace resist {

/// Path length; nullopt is the Unreachable sentinel.
using Distance = std::optional<double>;

/// Single-source shortest paths (binary heap, ties broken by VertexId order).
std::vector<Distance> distances_from(const WeightedGraph& graph, std::size_t source);

Distance distance(const WeightedGraph& graph, const VertexId& u, const VertexId& v);

/// Largest pairwise distance. Throws Disconnected.
double diameter(const WeightedGraph& graph);

/// Component label of every vertex once the edges of W are removed.
/// Throws EdgeNotInGraph.
std::vector<std::size_t> components_after_cut(const WeightedGraph& graph, std::span<const EdgeRecord> cut);

/// Finite edge set claimed to separate two boundary points.
struct CutWitness {
  std::vector<EdgeRecord> edges;
  std::string side_a = "A";
  std::string side_b = "B";
};

struct CutVerdict {
  enum class Kind { Separated, NotSeparated, UnknownAtDepth };
  Kind kind = Kind::UnknownAtDepth;
  /// W-avoiding path for NotSeparated.
  std::vector<VertexId> path;
};

std::string to_string(CutVerdict::Kind kind);

/// Checks W against the rays of x and y inside the depth-`max_depth` truncation.
/// Exact for acyclic sources; a semi-decision otherwise.
CutVerdict verify_cut_witness(const GraphSource& source, const CutWitness& witness, const BoundaryPoint& x,
                              const BoundaryPoint& y, int max_depth);

/// Vertex function that changes across finitely many edges only.
struct FlatFunction {
  Eigen::VectorXd values;
  std::vector<EdgeRecord> witness;
};

/// Indicator of the component of `seed` after removing the cut; witness is
/// the set of cut edges the indicator actually changes across.
FlatFunction indicator_after_cut(const WeightedGraph& graph, std::span<const EdgeRecord> cut, std::size_t seed);

/// 0/1 flat function equal to 1 on A and 0 on B, from a minimum edge cut.
/// Throws NotSeparable when A and B intersect or either is empty.
FlatFunction separate_compact_sets(const WeightedGraph& graph, std::span<const std::size_t> a,
                                   std::span<const std::size_t> b);

/// True when f changes only across witness edges.
bool is_flat(const WeightedGraph& graph, const FlatFunction& f);

struct DominanceReport {
  std::size_t pairs_checked = 0;
  double max_ratio = 0.0;  // max d1/d0 over reachable sampled pairs
  double min_witness_resistance = 0.0;
};

/// Checks d1 <= d0 on sampled pairs when R1 <= R0 edgewise, and that every
/// supplied witness keeps strictly positive resistances under R1.
/// Throws DominanceViolated.
DominanceReport metric_dominance_check(const WeightedGraph& graph, std::span<const double> r0,
                                       std::span<const double> r1,
                                       std::span<const std::pair<std::size_t, std::size_t>> sample_pairs,
                                       std::span<const CutWitness> witnesses = {});

}  // namespace resist
