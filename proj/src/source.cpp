#include "resist/source.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "resist/graph_io.hpp"
#include "resist/random_graphs.hpp"

namespace resist {

BoundaryPoint GraphSource::ray_class(const VertexId& v) const {
  throw Error(ErrorCode::BadSpec, describe() + " has no rays (vertex " + v.str() + ")");
}

Neighbor GraphSource::ray_successor(const VertexId& v) const {
  throw Error(ErrorCode::BadSpec, describe() + " has no rays (vertex " + v.str() + ")");
}

VertexId GraphSource::ray_vertex(const BoundaryPoint& point, int) const {
  throw Error(ErrorCode::BadSpec, describe() + " has no ray for " + point.name);
}

namespace {

[[noreturn]] void unknown(const GraphSource& s, const VertexId& v) {
  throw Error(ErrorCode::UnknownVertex, v.str() + " is not a vertex of " + s.describe());
}

constexpr int kMaxFigureADepth = 60;

class FigureASource final : public GraphSource {
 public:
  std::string describe() const override { return "figure-a"; }
  VertexId root() const override { return spine(0); }
  bool acyclic() const override { return true; }

  std::vector<Neighbor> neighbors(const VertexId& v) const override {
    const auto n = check(v);
    if (v.tag() == "u") return {{spine(n), 1.0}};
    if (v.tag() == "u*") return {{spine(n), std::ldexp(1.0, -static_cast<int>(n))}};
    auto out = spine_neighbors(n);
    const std::int64_t count = std::int64_t{1} << n;
    out.reserve(out.size() + static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) out.push_back({VertexId("u", {n, k}), 1.0});
    return out;
  }

  std::vector<Neighbor> lumped_neighbors(const VertexId& v) const override {
    const auto n = check(v);
    if (v.tag() != "v") return neighbors(v);
    auto out = spine_neighbors(n);
    // 2^n unit pendants in parallel.
    out.push_back({VertexId("u*", {n}), std::ldexp(1.0, -static_cast<int>(n))});
    return out;
  }

  BoundaryPoint ray_class(const VertexId& v) const override {
    check(v);
    return BoundaryPoint::spine_end();
  }

  Neighbor ray_successor(const VertexId& v) const override {
    const auto n = check(v);
    if (v.tag() != "v") return GraphSource::ray_successor(v);
    return {spine(n + 1), std::ldexp(1.0, -static_cast<int>(n) - 1)};
  }

  VertexId ray_vertex(const BoundaryPoint& point, int depth) const override {
    if (!point.is_ray() || point.name != "end") return GraphSource::ray_vertex(point, depth);
    return spine(depth);
  }

 private:
  static VertexId spine(std::int64_t n) { return VertexId("v", {n}); }

  static std::vector<Neighbor> spine_neighbors(std::int64_t n) {
    std::vector<Neighbor> out;
    if (n > 0) out.push_back({spine(n - 1), std::ldexp(1.0, -static_cast<int>(n))});
    out.push_back({spine(n + 1), std::ldexp(1.0, -static_cast<int>(n) - 1)});
    return out;
  }

  std::int64_t check(const VertexId& v) const {
    const auto c = v.coords();
    if (v.tag() == "v" && c.size() == 1 && c[0] >= 0 && c[0] <= kMaxFigureADepth) return c[0];
    if (v.tag() == "u*" && c.size() == 1 && c[0] >= 0 && c[0] <= kMaxFigureADepth) return c[0];
    if (v.tag() == "u" && c.size() == 2 && c[0] >= 0 && c[0] <= kMaxFigureADepth && c[1] >= 0 &&
        c[1] < (std::int64_t{1} << c[0])) {
      return c[0];
    }
    unknown(*this, v);
  }
};

class GeometricTreeSource : public GraphSource {
 public:
  GeometricTreeSource(int branching, double ratio) : branching_(branching), ratio_(ratio) {}

  std::string describe() const override {
    std::ostringstream out;
    out.precision(17);
    out << "geometric-tree:" << branching_ << "," << ratio_;
    return out.str();
  }
  VertexId root() const override { return VertexId("t"); }
  bool acyclic() const override { return true; }

  std::vector<Neighbor> neighbors(const VertexId& v) const override {
    check(v);
    std::vector<Neighbor> out;
    const auto d = static_cast<int>(v.depth());
    if (d > 0) out.push_back({v.parent(), edge_length(d)});
    for (int i = 0; i < branching_; ++i) out.push_back({v.child(i), edge_length(d + 1)});
    return out;
  }

  BoundaryPoint ray_class(const VertexId& v) const override {
    check(v);
    return BoundaryPoint::ray(std::vector<std::int64_t>(v.coords().begin(), v.coords().end()), 0);
  }

  Neighbor ray_successor(const VertexId& v) const override {
    check(v);
    return {v.child(0), edge_length(static_cast<int>(v.depth()) + 1)};
  }

  VertexId ray_vertex(const BoundaryPoint& point, int depth) const override {
    if (!point.is_ray() || point.name == "end") return GraphSource::ray_vertex(point, depth);
    std::vector<std::int64_t> word;
    for (int i = 0; i < depth; ++i) {
      const auto letter = point.letter(static_cast<std::size_t>(i));
      if (letter < 0 || letter >= branching_) return GraphSource::ray_vertex(point, depth);
      word.push_back(letter);
    }
    return VertexId("t", std::move(word));
  }

 protected:
  /// Resistance of an edge between depths d-1 and d.
  double edge_length(int d) const { return std::pow(ratio_, d); }

  void check(const VertexId& v) const {
    if (v.tag() != "t") unknown(*this, v);
    for (auto c : v.coords()) {
      if (c < 0 || c >= branching_) unknown(*this, v);
    }
  }

  int branching_;
  double ratio_;
};

class SiblingTreeSource final : public GeometricTreeSource {
 public:
  SiblingTreeSource(int branching, double ratio, double cross_ratio)
      : GeometricTreeSource(branching, ratio), cross_ratio_(cross_ratio) {}

  std::string describe() const override {
    std::ostringstream out;
    out.precision(17);
    out << "sibling-tree:" << branching_ << "," << ratio_ << "," << cross_ratio_;
    return out.str();
  }
  bool acyclic() const override { return false; }

  std::vector<Neighbor> neighbors(const VertexId& v) const override {
    auto out = GeometricTreeSource::neighbors(v);
    const auto c = v.coords();
    const auto n = c.size();
    if (n == 0) return out;
    bool leftmost_parent = true;
    for (std::size_t i = 0; i + 1 < n; ++i) leftmost_parent = leftmost_parent && c[i] == 0;
    if (!leftmost_parent) return out;
    const double length = std::pow(cross_ratio_, static_cast<double>(n));
    if (c[n - 1] == 0) out.push_back({v.parent().child(branching_ - 1), length});
    else if (c[n - 1] == branching_ - 1) out.push_back({v.parent().child(0), length});
    return out;
  }

 private:
  double cross_ratio_;
};

class RaySource final : public GraphSource {
 public:
  explicit RaySource(RaySpec spec) : spec_(spec) {}

  std::string describe() const override {
    std::ostringstream out;
    out.precision(17);
    if (spec_.rule == RaySpec::Rule::Geometric) out << "ray:geometric," << spec_.scale << "," << spec_.ratio;
    else out << "ray:harmonic," << spec_.scale;
    return out.str();
  }
  VertexId root() const override { return node(0); }
  bool acyclic() const override { return true; }

  std::vector<Neighbor> neighbors(const VertexId& v) const override {
    const auto n = check(v);
    std::vector<Neighbor> out;
    if (n > 0) out.push_back({node(n - 1), length(n - 1)});
    out.push_back({node(n + 1), length(n)});
    return out;
  }

  BoundaryPoint ray_class(const VertexId& v) const override {
    check(v);
    return BoundaryPoint::spine_end();
  }
  Neighbor ray_successor(const VertexId& v) const override {
    const auto n = check(v);
    return {node(n + 1), length(n)};
  }
  VertexId ray_vertex(const BoundaryPoint& point, int depth) const override {
    if (point.name != "end") return GraphSource::ray_vertex(point, depth);
    return node(depth);
  }

 private:
  static VertexId node(std::int64_t n) { return VertexId("r", {n}); }
  double length(std::int64_t n) const {
    if (spec_.rule == RaySpec::Rule::Geometric) return spec_.scale * std::pow(spec_.ratio, static_cast<double>(n));
    return spec_.scale / static_cast<double>(n + 1);
  }
  std::int64_t check(const VertexId& v) const {
    const auto c = v.coords();
    if (v.tag() != "r" || c.size() != 1 || c[0] < 0) unknown(*this, v);
    return c[0];
  }

  RaySpec spec_;
};

class FiniteSource final : public GraphSource {
 public:
  explicit FiniteSource(WeightedGraph graph, std::string name) : graph_(std::move(graph)), name_(std::move(name)) {
    if (graph_.num_vertices() == 0) throw Error(ErrorCode::BadSpec, "empty finite graph");
    const auto labels = component_labels(graph_);
    const std::size_t components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    acyclic_ = graph_.num_edges() + components == graph_.num_vertices();
  }

  std::string describe() const override { return name_; }
  VertexId root() const override { return graph_.id(0); }
  bool acyclic() const override { return acyclic_; }
  bool is_finite() const override { return true; }
  const WeightedGraph* finite_graph() const override { return &graph_; }

  std::vector<Neighbor> neighbors(const VertexId& v) const override {
    const auto i = graph_.find(v);
    if (!i) unknown(*this, v);
    std::vector<Neighbor> out;
    for (const auto& inc : graph_.incident(*i)) out.push_back({graph_.id(inc.neighbor), inc.resistance});
    return out;
  }

 private:
  WeightedGraph graph_;
  std::string name_;
  bool acyclic_ = false;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto stop = text.find(sep, start);
    out.emplace_back(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::ConfigError, "not a number: '" + s + "'");
  return value;
}

long long to_integer(const std::string& s) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::ConfigError, "not an integer: '" + s + "'");
  return value;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string kind(text.substr(0, colon));
  const std::string body = colon == std::string_view::npos ? std::string() : std::string(text.substr(colon + 1));
  const auto args = body.empty() ? std::vector<std::string>{} : split(body, ',');
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw Error(ErrorCode::ConfigError, "wrong number of parameters in generator '" + std::string(text) + "'");
    }
  };
  if (kind == "figure-a") {
    need(0, 0);
    return FigureASpec{};
  }
  if (kind == "geometric-tree") {
    need(2, 2);
    return GeometricTreeSpec{static_cast<int>(to_integer(args[0])), to_double(args[1])};
  }
  if (kind == "sibling-tree") {
    need(3, 3);
    return SiblingTreeSpec{static_cast<int>(to_integer(args[0])), to_double(args[1]), to_double(args[2])};
  }
  if (kind == "ray") {
    need(2, 4);
    RaySpec spec;
    if (args[0] == "geometric") {
      need(3, 4);
      spec.rule = RaySpec::Rule::Geometric;
      spec.scale = to_double(args[1]);
      spec.ratio = to_double(args[2]);
      spec.claim_compact = args.size() == 4 && args[3] == "compact";
    } else if (args[0] == "harmonic") {
      spec.rule = RaySpec::Rule::Harmonic;
      spec.scale = to_double(args[1]);
      spec.claim_compact = args.size() >= 3 && args.back() == "compact";
    } else {
      throw Error(ErrorCode::ConfigError, "ray rule must be geometric or harmonic");
    }
    return spec;
  }
  if (kind == "file") {
    if (body.empty()) throw Error(ErrorCode::ConfigError, "file generator needs a path");
    return FiniteFileSpec{body};
  }
  if (kind == "random-tree") {
    need(1, 3);
    RandomTreeSpec spec{static_cast<std::size_t>(to_integer(args[0]))};
    if (args.size() == 3) {
      spec.rmin = to_double(args[1]);
      spec.rmax = to_double(args[2]);
    }
    return spec;
  }
  if (kind == "random-graph") {
    need(2, 2);
    return RandomGraphSpec{static_cast<std::size_t>(to_integer(args[0])), static_cast<std::size_t>(to_integer(args[1]))};
  }
  throw Error(ErrorCode::ConfigError, "unknown generator '" + std::string(text) + "'");
}

SourcePtr instantiate_generator(const GeneratorSpec& spec, std::uint64_t seed) {
  struct Visitor {
    std::uint64_t seed;
    SourcePtr operator()(const FigureASpec&) const { return std::make_shared<FigureASource>(); }
    SourcePtr operator()(const GeometricTreeSpec& s) const {
      if (s.branching < 2) throw Error(ErrorCode::BadSpec, "branching must be >= 2");
      if (!(s.ratio > 0.0 && s.ratio < 1.0)) throw Error(ErrorCode::BadSpec, "ratio must lie in (0, 1)");
      return std::make_shared<GeometricTreeSource>(s.branching, s.ratio);
    }
    SourcePtr operator()(const SiblingTreeSpec& s) const {
      if (s.branching < 2) throw Error(ErrorCode::BadSpec, "branching must be >= 2");
      if (!(s.ratio > 0.0 && s.ratio < 1.0)) throw Error(ErrorCode::BadSpec, "ratio must lie in (0, 1)");
      if (!(s.cross_ratio > 0.0 && s.cross_ratio < 1.0)) {
        throw Error(ErrorCode::BadSpec, "cross-edge lengths must decrease to 0");
      }
      return std::make_shared<SiblingTreeSource>(s.branching, s.ratio, s.cross_ratio);
    }
    SourcePtr operator()(const RaySpec& s) const {
      if (!(s.scale > 0.0)) throw Error(ErrorCode::BadSpec, "ray scale must be positive");
      if (s.rule == RaySpec::Rule::Geometric && !(s.ratio > 0.0)) throw Error(ErrorCode::BadSpec, "ratio must be > 0");
      const bool summable = s.rule == RaySpec::Rule::Geometric && s.ratio < 1.0;
      if (s.claim_compact && !summable) throw Error(ErrorCode::BadSpec, "non-summable ray cannot be compact");
      return std::make_shared<RaySource>(s);
    }
    SourcePtr operator()(const FiniteFileSpec& s) const {
      return std::make_shared<FiniteSource>(load_graph(s.path, HalfEdgeLength{}), "file:" + s.path);
    }
    SourcePtr operator()(const RandomTreeSpec& s) const {
      if (s.vertices < 2) throw Error(ErrorCode::BadSpec, "random tree needs >= 2 vertices");
      std::mt19937_64 rng(seed);
      return std::make_shared<FiniteSource>(random_tree(s.vertices, rng, s.rmin, s.rmax),
                                            "random-tree:" + std::to_string(s.vertices));
    }
    SourcePtr operator()(const RandomGraphSpec& s) const {
      if (s.vertices < 2) throw Error(ErrorCode::BadSpec, "random graph needs >= 2 vertices");
      std::mt19937_64 rng(seed);
      return std::make_shared<FiniteSource>(random_connected_graph(s.vertices, s.extra, rng, s.rmin, s.rmax),
                                            "random-graph:" + std::to_string(s.vertices));
    }
  };
  return std::visit(Visitor{seed}, spec);
}

SourcePtr finite_source(WeightedGraph graph) { return std::make_shared<FiniteSource>(std::move(graph), "finite"); }

}  // namespace resist
