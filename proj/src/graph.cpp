#include "resist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace resist {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

VertexWeightScheme parse_weight_scheme(std::string_view text) {
  if (text == "mu0" || text == "half-edge-length") return HalfEdgeLength{};
  if (text == "deg" || text == "conductance-sum") return ConductanceSum{};
  if (text.rfind("const:", 0) == 0) {
    const auto body = std::string(text.substr(6));
    try {
      std::size_t used = 0;
      const double c = std::stod(body, &used);
      if (used == body.size() && c > 0.0) return ConstantWeight{c};
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::ConfigError, "unknown weight scheme '" + std::string(text) + "'");
}

std::string describe(const VertexWeightScheme& scheme) {
  return std::visit(overloaded{[](const HalfEdgeLength&) { return std::string("mu0"); },
                               [](const ConductanceSum&) { return std::string("deg"); },
                               [](const ConstantWeight& c) { return "const:" + std::to_string(c.value); },
                               [](const ExplicitWeight&) { return std::string("explicit"); }},
                    scheme);
}

Eigen::VectorXd compute_weights(const std::vector<VertexId>& ids, const std::vector<WeightedGraph::Edge>& edges,
                                const VertexWeightScheme& scheme) {
  const auto n = static_cast<Eigen::Index>(ids.size());
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(n);
  std::visit(overloaded{[&](const HalfEdgeLength&) {
                          for (const auto& e : edges) {
                            mu(e.u) += 0.5 * e.resistance;
                            mu(e.v) += 0.5 * e.resistance;
                          }
                        },
                        [&](const ConductanceSum&) {
                          for (const auto& e : edges) {
                            mu(e.u) += e.conductance();
                            mu(e.v) += e.conductance();
                          }
                        },
                        [&](const ConstantWeight& c) { mu.setConstant(c.value); },
                        [&](const ExplicitWeight& table) {
                          for (Eigen::Index i = 0; i < n; ++i) {
                            auto it = table.table.find(ids[i]);
                            if (it == table.table.end()) {
                              throw Error(ErrorCode::NonPositiveWeight, "no explicit weight for " + ids[i].str());
                            }
                            mu(i) = it->second;
                          }
                        }},
             scheme);
  return mu;
}

WeightedGraph WeightedGraph::from_parts(std::vector<VertexId> ids, Eigen::VectorXd mu, std::vector<Edge> edges) {
  WeightedGraph g;
  if (static_cast<std::size_t>(mu.size()) != ids.size()) {
    throw Error(ErrorCode::DomainMismatch, "weight table size differs from vertex count");
  }
  g.ids_ = std::move(ids);
  g.mu_ = std::move(mu);
  g.index_.reserve(g.ids_.size());
  for (std::size_t i = 0; i < g.ids_.size(); ++i) {
    if (!g.index_.emplace(g.ids_[i], i).second) {
      throw Error(ErrorCode::BadSpec, "vertex listed twice: " + g.ids_[i].str());
    }
    if (!(g.mu_(i) > 0.0) || !std::isfinite(g.mu_(i))) {
      throw Error(ErrorCode::NonPositiveWeight, "mu(" + g.ids_[i].str() + ") = " + std::to_string(g.mu_(i)));
    }
  }
  g.adjacency_.assign(g.ids_.size(), {});
  g.edges_ = std::move(edges);
  for (std::size_t k = 0; k < g.edges_.size(); ++k) {
    const auto& e = g.edges_[k];
    if (e.u >= g.ids_.size() || e.v >= g.ids_.size()) throw Error(ErrorCode::UnknownVertex, "edge endpoint index");
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self loop at " + g.ids_[e.u].str());
    if (!(e.resistance > 0.0) || !std::isfinite(e.resistance)) {
      throw Error(ErrorCode::NonPositiveResistance,
                  g.ids_[e.u].str() + "-" + g.ids_[e.v].str() + " has R = " + std::to_string(e.resistance));
    }
    g.adjacency_[e.u].push_back({e.v, k, e.resistance});
    g.adjacency_[e.v].push_back({e.u, k, e.resistance});
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    for (std::size_t j = 1; j < adj.size(); ++j) {
      if (adj[j].neighbor == adj[j - 1].neighbor) {
        throw Error(ErrorCode::DuplicateEdge, g.ids_[v].str() + "-" + g.ids_[adj[j].neighbor].str());
      }
    }
    // Incidence order follows edge order for deterministic traversal.
    std::sort(adj.begin(), adj.end(), [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
  }
  return g;
}

std::optional<std::size_t> WeightedGraph::find(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedGraph::index_of(const VertexId& v) const {
  if (auto i = find(v)) return *i;
  throw Error(ErrorCode::UnknownVertex, v.str());
}

std::size_t WeightedGraph::index_of_name(std::string_view name) const {
  if (auto i = find(VertexId::parse(std::string(name)))) return *i;
  if (auto i = find(VertexId(std::string(name)))) return *i;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].str() == name) return i;
  }
  throw Error(ErrorCode::UnknownVertex, std::string(name));
}

std::optional<std::size_t> WeightedGraph::find_edge(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const std::size_t other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  for (const auto& inc : adj) {
    if (inc.neighbor == other) return inc.edge;
  }
  return std::nullopt;
}

EdgeRecord WeightedGraph::record(std::size_t edge) const {
  const auto& e = edges_[edge];
  return {ids_[e.u], ids_[e.v], e.resistance};
}

std::vector<EdgeRecord> WeightedGraph::edge_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) out.push_back(record(k));
  return out;
}

std::vector<std::size_t> WeightedGraph::resolve_edges(std::span<const EdgeRecord> records) const {
  std::vector<std::size_t> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    const auto u = find(r.u);
    const auto v = find(r.v);
    std::optional<std::size_t> e;
    if (u && v) e = find_edge(*u, *v);
    if (!e) throw Error(ErrorCode::EdgeNotInGraph, r.u.str() + "-" + r.v.str());
    out.push_back(*e);
  }
  return out;
}

WeightedGraph WeightedGraph::with_weights(const VertexWeightScheme& scheme) const {
  return from_parts(ids_, compute_weights(ids_, edges_, scheme), edges_);
}

WeightedGraph WeightedGraph::with_resistances(std::span<const double> resistances) const {
  if (resistances.size() != edges_.size()) throw Error(ErrorCode::DomainMismatch, "one resistance per edge expected");
  auto edges = edges_;
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].resistance = resistances[k];
  return from_parts(ids_, mu_, std::move(edges));
}

namespace {

WeightedGraph build_checked(std::vector<VertexId> ids, std::vector<WeightedGraph::Edge> edges,
                            const std::vector<std::optional<double>>& explicit_mu, const VertexWeightScheme& scheme) {
  std::vector<std::size_t> degree(ids.size(), 0);
  for (const auto& e : edges) {
    if (e.u < degree.size()) ++degree[e.u];
    if (e.v < degree.size()) ++degree[e.v];
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (degree[i] == 0) throw Error(ErrorCode::IsolatedVertexSpecMismatch, "vertex without edges: " + ids[i].str());
  }
  for (const auto& e : edges) {
    if (!(e.resistance > 0.0)) {
      throw Error(ErrorCode::NonPositiveResistance,
                  ids[e.u].str() + "-" + ids[e.v].str() + " has R = " + std::to_string(e.resistance));
    }
  }
  Eigen::VectorXd mu;
  const bool all_explicit =
      !explicit_mu.empty() && std::all_of(explicit_mu.begin(), explicit_mu.end(), [](auto& m) { return m.has_value(); });
  if (!all_explicit) mu = compute_weights(ids, edges, scheme);
  else mu = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ids.size()));
  for (std::size_t i = 0; i < explicit_mu.size(); ++i) {
    if (explicit_mu[i]) mu(static_cast<Eigen::Index>(i)) = *explicit_mu[i];
  }
  return WeightedGraph::from_parts(std::move(ids), std::move(mu), std::move(edges));
}

}  // namespace

WeightedGraph build_finite(std::span<const EdgeRecord> records, const VertexWeightScheme& scheme) {
  std::vector<VertexId> ids;
  std::unordered_map<VertexId, std::size_t, VertexIdHash> index;
  auto intern = [&](const VertexId& v) {
    auto [it, fresh] = index.emplace(v, ids.size());
    if (fresh) ids.push_back(v);
    return it->second;
  };
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(records.size());
  for (const auto& r : records) edges.push_back({intern(r.u), intern(r.v), r.resistance});
  return build_checked(std::move(ids), std::move(edges), {}, scheme);
}

WeightedGraph build_finite(std::span<const VertexSpec> vertices, std::span<const EdgeRecord> records,
                           const VertexWeightScheme& scheme) {
  std::vector<VertexId> ids;
  std::vector<std::optional<double>> mu;
  std::unordered_map<VertexId, std::size_t, VertexIdHash> index;
  for (const auto& v : vertices) {
    if (!index.emplace(v.id, ids.size()).second) {
      throw Error(ErrorCode::IsolatedVertexSpecMismatch, "vertex listed twice: " + v.id.str());
    }
    ids.push_back(v.id);
    mu.push_back(v.mu);
  }
  std::vector<WeightedGraph::Edge> edges;
  for (const auto& r : records) {
    auto u = index.find(r.u);
    auto v = index.find(r.v);
    if (u == index.end() || v == index.end()) {
      throw Error(ErrorCode::IsolatedVertexSpecMismatch, "edge endpoint not listed: " + r.u.str() + "-" + r.v.str());
    }
    edges.push_back({u->second, v->second, r.resistance});
  }
  return build_checked(std::move(ids), std::move(edges), mu, scheme);
}

double volume(const WeightedGraph& graph) {
  double sum = 0.0;
  for (const auto& e : graph.edges()) sum += e.resistance;
  return sum;
}

std::vector<std::size_t> component_labels(const WeightedGraph& graph, const std::vector<bool>* removed) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(graph.num_vertices(), unset);
  std::vector<std::size_t> stack;
  std::size_t next = 0;
  for (std::size_t s = 0; s < graph.num_vertices(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (const auto& inc : graph.incident(v)) {
        if (removed && (*removed)[inc.edge]) continue;
        if (label[inc.neighbor] == unset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace resist
