#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "resist/boundary.hpp"
#include "resist/graph.hpp"

namespace resist {

struct Neighbor {
  VertexId vertex;
  double resistance = 1.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Lazy, possibly infinite, locally finite edge-weighted graph.
///
/// Queries are pure: the same vertex always yields the same incident list
/// in the same order.
class GraphSource {
 public:
  virtual ~GraphSource() = default;

  virtual std::string describe() const = 0;
  virtual VertexId root() const = 0;

  /// Complete, duplicate-free incident list. Throws UnknownVertex.
  virtual std::vector<Neighbor> neighbors(const VertexId& v) const = 0;

  /// Neighbor list in which families of interchangeable degree-one
  /// neighbors are merged into one parallel-equivalent vertex. Harmonic
  /// values at the remaining vertices are unchanged when the merged family
  /// carries a common boundary datum.
  virtual std::vector<Neighbor> lumped_neighbors(const VertexId& v) const { return neighbors(v); }

  /// True when the source is a tree, so finite separation checks are exact.
  virtual bool acyclic() const = 0;
  virtual bool is_finite() const { return false; }
  /// The underlying graph for finite sources, else nullptr.
  virtual const WeightedGraph* finite_graph() const { return nullptr; }

  /// Boundary class of the canonical ray through v.
  virtual BoundaryPoint ray_class(const VertexId& v) const;
  /// Next vertex on the canonical ray through v, with the edge resistance.
  virtual Neighbor ray_successor(const VertexId& v) const;
  /// Vertex at hop distance `depth` from the root along the ray of `point`.
  virtual VertexId ray_vertex(const BoundaryPoint& point, int depth) const;
};

using SourcePtr = std::shared_ptr<const GraphSource>;

// ---------------------------------------------------------------------------
// Generator specifications

/// Spine v_0, v_1, ... with R(v_n, v_{n+1}) = 2^{-n-1} and 2^n unit pendants at v_n.
struct FigureASpec {};

/// Complete b-ary tree; an edge from depth d to d+1 has resistance a^{d+1}.
struct GeometricTreeSpec {
  int branching = 2;
  double ratio = 1.0 / 3.0;
};

/// Geometric tree plus, for each depth n >= 1, a cross edge of length
/// cross_ratio^n joining the first and last child of the leftmost vertex at
/// depth n - 1.
struct SiblingTreeSpec {
  int branching = 2;
  double ratio = 1.0 / 3.0;
  double cross_ratio = 0.25;
};

/// One-sided ray r_0, r_1, ... ; edge (n, n+1) has resistance scale * ratio^n
/// (geometric) or scale / (n + 1) (harmonic, infinite length).
struct RaySpec {
  enum class Rule { Geometric, Harmonic };
  Rule rule = Rule::Geometric;
  double scale = 1.0;
  double ratio = 0.5;
  bool claim_compact = false;
};

struct FiniteFileSpec {
  std::string path;
};

/// Seeded random finite tree with resistances uniform in [rmin, rmax].
struct RandomTreeSpec {
  std::size_t vertices = 100;
  double rmin = 0.1;
  double rmax = 2.0;
};

/// Seeded random tree plus `extra` random chords.
struct RandomGraphSpec {
  std::size_t vertices = 100;
  std::size_t extra = 20;
  double rmin = 0.1;
  double rmax = 2.0;
};

using GeneratorSpec = std::variant<FigureASpec, GeometricTreeSpec, SiblingTreeSpec, RaySpec, FiniteFileSpec,
                                   RandomTreeSpec, RandomGraphSpec>;

/// Parses "figure-a", "geometric-tree:b,a", "sibling-tree:b,a,c",
/// "ray:geometric,scale,ratio", "ray:harmonic,scale", "file:<path>",
/// "random-tree:n", "random-graph:n,extra".
GeneratorSpec parse_generator_spec(std::string_view text);

/// Throws BadSpec on invalid parameters. `seed` drives the random families.
SourcePtr instantiate_generator(const GeneratorSpec& spec, std::uint64_t seed = 0);

/// Finite graph exposed as a source (root = first vertex).
SourcePtr finite_source(WeightedGraph graph);

}  // namespace resist
