#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resist/vertex_id.hpp"

namespace resist {

/// A point of the boundary: either the end of a Cauchy ray supplied by a
/// generator, or a degree-one vertex of the host.
///
/// Ray ends on trees are infinite child-index words stored as a finite
/// prefix followed by a repeating letter, kept in canonical form (no
/// trailing copies of the repeating letter in the prefix). Spine-like
/// sources (ray, Figure A) have a single end with an empty word.
struct BoundaryPoint {
  enum class Kind { RayEnd, Vertex };

  Kind kind = Kind::RayEnd;
  std::string name;
  std::vector<std::int64_t> prefix;
  std::int64_t tail = 0;
  VertexId vertex;  // Kind::Vertex only

  static BoundaryPoint ray(std::vector<std::int64_t> prefix, std::int64_t tail);
  static BoundaryPoint spine_end();
  static BoundaryPoint at_vertex(const VertexId& v);

  /// Letter i of the infinite child-index word.
  std::int64_t letter(std::size_t i) const { return i < prefix.size() ? prefix[i] : tail; }
  bool is_ray() const { return kind == Kind::RayEnd; }

  /// Parses "end", "ray:(0)", "ray:0.1(1)", or "vertex:<id>".
  static BoundaryPoint parse(const std::string& text);

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) { return a.name == b.name; }
};

}  // namespace resist
