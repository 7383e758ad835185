#include "resist/vertex_id.hpp"

#include <charconv>

#include "resist/boundary.hpp"
#include "resist/error.hpp"

namespace resist {

VertexId VertexId::child(std::int64_t index) const {
  auto coords = coords_;
  coords.push_back(index);
  return VertexId(tag_, std::move(coords));
}

VertexId VertexId::parent() const {
  if (coords_.empty()) throw Error(ErrorCode::UnknownVertex, "root has no parent: " + str());
  return VertexId(tag_, std::vector<std::int64_t>(coords_.begin(), coords_.end() - 1));
}

std::string VertexId::str() const {
  if (coords_.empty()) return tag_;
  std::string out = tag_;
  out += ':';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(coords_[i]);
  }
  return out;
}

namespace {

bool parse_word(std::string_view text, std::vector<std::int64_t>& out) {
  out.clear();
  if (text.empty()) return false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto stop = text.find('.', start);
    const auto piece = text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) return false;
    out.push_back(value);
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return true;
}

}  // namespace

VertexId VertexId::parse(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon != std::string::npos && colon > 0) {
    std::vector<std::int64_t> coords;
    if (parse_word(std::string_view(text).substr(colon + 1), coords)) return VertexId(text.substr(0, colon), coords);
  }
  return VertexId(text);
}

std::size_t VertexIdHash::operator()(const VertexId& v) const noexcept {
  std::size_t h = std::hash<std::string>{}(v.tag());
  for (auto c : v.coords()) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// BoundaryPoint

namespace {

std::string join_word(const std::vector<std::int64_t>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace

BoundaryPoint BoundaryPoint::ray(std::vector<std::int64_t> prefix, std::int64_t tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  BoundaryPoint p;
  p.kind = Kind::RayEnd;
  p.name = "ray:" + join_word(prefix) + "(" + std::to_string(tail) + ")";
  p.prefix = std::move(prefix);
  p.tail = tail;
  return p;
}

BoundaryPoint BoundaryPoint::spine_end() {
  BoundaryPoint p;
  p.kind = Kind::RayEnd;
  p.name = "end";
  return p;
}

BoundaryPoint BoundaryPoint::at_vertex(const VertexId& v) {
  BoundaryPoint p;
  p.kind = Kind::Vertex;
  p.name = "vertex:" + v.str();
  p.vertex = v;
  return p;
}

BoundaryPoint BoundaryPoint::parse(const std::string& text) {
  if (text == "end") return spine_end();
  if (text.rfind("vertex:", 0) == 0) return at_vertex(VertexId::parse(text.substr(7)));
  if (text.rfind("ray:", 0) == 0) {
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open != std::string::npos && close == text.size() - 1 && close > open + 1) {
      std::vector<std::int64_t> prefix;
      std::vector<std::int64_t> tail;
      const auto word = text.substr(4, open - 4);
      if ((word.empty() || parse_word(word, prefix)) && parse_word(text.substr(open + 1, close - open - 1), tail) &&
          tail.size() == 1) {
        return ray(std::move(prefix), tail[0]);
      }
    }
  }
  throw Error(ErrorCode::ConfigError, "cannot parse boundary point '" + text + "'");
}

}  // namespace resist
