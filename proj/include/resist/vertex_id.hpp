#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace resist {

/// Generator-scoped vertex address.
///
/// A tag plus a coordinate word: the geometric tree uses tag "t" and the
/// child-index word, Figure A uses "v" (spine index) and "u" (spine index,
/// pendant index), finite graphs use the file's opaque string as the tag.
/// Ordering is lexicographic on (tag, coords), which gives numeric order
/// within a family.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string tag, std::vector<std::int64_t> coords = {})
      : tag_(std::move(tag)), coords_(std::move(coords)) {}

  const std::string& tag() const noexcept { return tag_; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  std::size_t depth() const noexcept { return coords_.size(); }

  VertexId child(std::int64_t index) const;
  VertexId parent() const;

  /// "tag" or "tag:c0.c1.c2".
  std::string str() const;
  /// Inverse of str(); text whose suffix is not an integer word is a bare tag.
  static VertexId parse(const std::string& text);

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
    if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

 private:
  std::string tag_;
  std::vector<std::int64_t> coords_;
};

struct VertexIdHash {
  std::size_t operator()(const VertexId& v) const noexcept;
};

}  // namespace resist
