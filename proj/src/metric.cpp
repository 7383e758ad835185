#include "resist/metric.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>

#include "resist/truncation.hpp"

namespace resist {

std::vector<Distance> distances_from(const WeightedGraph& graph, std::size_t source) {
  const auto n = graph.num_vertices();
  // Rank of each vertex in VertexId order breaks ties deterministically.
  std::vector<std::size_t> rank(n);
  {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return graph.id(a) < graph.id(b); });
    for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, inf);
  std::vector<bool> done(n, false);
  using Entry = std::tuple<double, std::size_t, std::size_t>;  // distance, rank, vertex
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, rank[source], source);
  while (!heap.empty()) {
    const auto [d, r, v] = heap.top();
    heap.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto& inc : graph.incident(v)) {
      const double nd = d + inc.resistance;
      if (nd < dist[inc.neighbor]) {
        dist[inc.neighbor] = nd;
        heap.emplace(nd, rank[inc.neighbor], inc.neighbor);
      }
    }
  }
  std::vector<Distance> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i] < inf) out[i] = dist[i];
  }
  return out;
}

Distance distance(const WeightedGraph& graph, const VertexId& u, const VertexId& v) {
  const auto a = graph.index_of(u);
  const auto b = graph.index_of(v);
  return distances_from(graph, a)[b];
}

double diameter(const WeightedGraph& graph) {
  double best = 0.0;
  for (std::size_t s = 0; s < graph.num_vertices(); ++s) {
    for (const auto& d : distances_from(graph, s)) {
      if (!d) throw Error(ErrorCode::Disconnected, "diameter of a disconnected graph");
      best = std::max(best, *d);
    }
  }
  return best;
}

namespace {

std::vector<bool> removal_mask(const WeightedGraph& graph, std::span<const EdgeRecord> cut) {
  std::vector<bool> removed(graph.num_edges(), false);
  for (auto e : graph.resolve_edges(cut)) removed[e] = true;
  return removed;
}

}  // namespace

std::vector<std::size_t> components_after_cut(const WeightedGraph& graph, std::span<const EdgeRecord> cut) {
  const auto removed = removal_mask(graph, cut);
  return component_labels(graph, &removed);
}

std::string to_string(CutVerdict::Kind kind) {
  switch (kind) {
    case CutVerdict::Kind::Separated: return "Separated";
    case CutVerdict::Kind::NotSeparated: return "NotSeparated";
    case CutVerdict::Kind::UnknownAtDepth: return "UnknownAtDepth";
  }
  return "Unknown";
}

CutVerdict verify_cut_witness(const GraphSource& source, const CutWitness& witness, const BoundaryPoint& x,
                              const BoundaryPoint& y, int max_depth) {
  const auto truncation = truncate(source, max_depth, ConstantWeight{1.0});
  const auto& host = truncation.host;
  std::vector<bool> removed(host.num_edges(), false);
  try {
    for (auto e : host.resolve_edges(witness.edges)) removed[e] = true;
  } catch (const Error&) {
    throw Error(ErrorCode::WitnessOutsideTruncation,
                "witness edge not inside the depth-" + std::to_string(max_depth) + " truncation");
  }
  auto tail_of = [&](const BoundaryPoint& p) {
    const auto v = host.find(source.ray_vertex(p, max_depth));
    if (!v) throw Error(ErrorCode::WitnessOutsideTruncation, "ray of " + p.name + " leaves the truncation");
    return *v;
  };
  const auto from = tail_of(x);
  const auto to = tail_of(y);

  // Breadth-first search for a W-avoiding path.
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(host.num_vertices(), unset);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == unset) {
    const auto v = queue.front();
    queue.pop_front();
    for (const auto& inc : host.incident(v)) {
      if (removed[inc.edge] || parent[inc.neighbor] != unset) continue;
      parent[inc.neighbor] = v;
      queue.push_back(inc.neighbor);
    }
  }
  CutVerdict verdict;
  if (parent[to] != unset) {
    verdict.kind = CutVerdict::Kind::NotSeparated;
    for (auto v = to;; v = parent[v]) {
      verdict.path.push_back(host.id(v));
      if (v == from) break;
    }
    std::reverse(verdict.path.begin(), verdict.path.end());
  } else {
    verdict.kind = source.acyclic() ? CutVerdict::Kind::Separated : CutVerdict::Kind::UnknownAtDepth;
  }
  return verdict;
}

FlatFunction indicator_after_cut(const WeightedGraph& graph, std::span<const EdgeRecord> cut, std::size_t seed) {
  const auto removed = removal_mask(graph, cut);
  const auto labels = component_labels(graph, &removed);
  FlatFunction f;
  f.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(graph.num_vertices()));
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    if (labels[v] == labels[seed]) f.values(static_cast<Eigen::Index>(v)) = 1.0;
  }
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const auto& e = graph.edges()[k];
    if (f.values(e.u) != f.values(e.v)) f.witness.push_back(graph.record(k));
  }
  return f;
}

FlatFunction separate_compact_sets(const WeightedGraph& graph, std::span<const std::size_t> a,
                                   std::span<const std::size_t> b) {
  const auto n = graph.num_vertices();
  if (a.empty() || b.empty()) throw Error(ErrorCode::NotSeparable, "both sets must be nonempty");
  std::vector<int> side(n, 0);  // 1 = A, 2 = B
  for (auto v : a) side[v] = 1;
  for (auto v : b) {
    if (side[v] == 1) throw Error(ErrorCode::NotSeparable, "sets share vertex " + graph.id(v).str());
    side[v] = 2;
  }

  // Unit-capacity max flow from A to B (each undirected edge carries one
  // unit either way); the residual-reachable set from A is a minimum cut side.
  std::vector<int> flow(graph.num_edges(), 0);  // +1: u->v, -1: v->u
  auto residual = [&](std::size_t edge, std::size_t from) {
    const auto& e = graph.edges()[edge];
    const int dir = from == e.u ? 1 : -1;
    return 1 - dir * flow[edge];
  };
  constexpr auto unset = static_cast<std::size_t>(-1);
  while (true) {
    std::vector<std::size_t> via(n, unset);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue;
    for (auto v : a) {
      seen[v] = true;
      queue.push_back(v);
    }
    std::size_t sink = unset;
    while (!queue.empty() && sink == unset) {
      const auto v = queue.front();
      queue.pop_front();
      for (const auto& inc : graph.incident(v)) {
        if (seen[inc.neighbor] || residual(inc.edge, v) <= 0) continue;
        seen[inc.neighbor] = true;
        via[inc.neighbor] = inc.edge;
        if (side[inc.neighbor] == 2) {
          sink = inc.neighbor;
          break;
        }
        queue.push_back(inc.neighbor);
      }
    }
    if (sink == unset) {
      FlatFunction f;
      f.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
      for (std::size_t v = 0; v < n; ++v) {
        if (seen[v]) f.values(static_cast<Eigen::Index>(v)) = 1.0;
      }
      for (std::size_t k = 0; k < graph.num_edges(); ++k) {
        const auto& e = graph.edges()[k];
        if (f.values(e.u) != f.values(e.v)) f.witness.push_back(graph.record(k));
      }
      return f;
    }
    for (auto v = sink; side[v] != 1;) {
      const auto edge = via[v];
      const auto& e = graph.edges()[edge];
      const auto prev = e.u == v ? e.v : e.u;
      flow[edge] += prev == e.u ? 1 : -1;
      v = prev;
    }
  }
}

bool is_flat(const WeightedGraph& graph, const FlatFunction& f) {
  if (static_cast<std::size_t>(f.values.size()) != graph.num_vertices()) return false;
  std::vector<bool> allowed(graph.num_edges(), false);
  try {
    for (auto e : graph.resolve_edges(f.witness)) allowed[e] = true;
  } catch (const Error&) {
    return false;
  }
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const auto& e = graph.edges()[k];
    if (!allowed[k] && f.values(e.u) != f.values(e.v)) return false;
  }
  return true;
}

DominanceReport metric_dominance_check(const WeightedGraph& graph, std::span<const double> r0,
                                       std::span<const double> r1,
                                       std::span<const std::pair<std::size_t, std::size_t>> sample_pairs,
                                       std::span<const CutWitness> witnesses) {
  if (r0.size() != graph.num_edges() || r1.size() != graph.num_edges()) {
    throw Error(ErrorCode::DomainMismatch, "one resistance per edge expected");
  }
  for (std::size_t k = 0; k < r0.size(); ++k) {
    if (r1[k] > r0[k]) {
      const auto rec = graph.record(k);
      throw Error(ErrorCode::DominanceViolated, "R1 > R0 on edge " + rec.u.str() + "-" + rec.v.str());
    }
  }
  const auto g0 = graph.with_resistances(r0);
  const auto g1 = graph.with_resistances(r1);
  DominanceReport report;
  std::vector<std::pair<std::size_t, std::size_t>> sorted(sample_pairs.begin(), sample_pairs.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](auto x, auto y) { return x.first < y.first; });
  std::vector<Distance> d0;
  std::vector<Distance> d1;
  std::size_t current = graph.num_vertices();
  for (const auto& [u, v] : sorted) {
    if (u != current) {
      d0 = distances_from(g0, u);
      d1 = distances_from(g1, u);
      current = u;
    }
    ++report.pairs_checked;
    if (!d0[v]) continue;
    if (!d1[v] || *d1[v] > *d0[v] * (1.0 + 1e-14)) {
      throw Error(ErrorCode::DominanceViolated, "d1 > d0 for pair " + graph.id(u).str() + ", " + graph.id(v).str());
    }
    if (*d0[v] > 0.0) report.max_ratio = std::max(report.max_ratio, *d1[v] / *d0[v]);
  }
  report.min_witness_resistance = std::numeric_limits<double>::infinity();
  for (const auto& w : witnesses) {
    for (auto e : graph.resolve_edges(w.edges)) report.min_witness_resistance = std::min(report.min_witness_resistance, r1[e]);
  }
  if (witnesses.empty()) report.min_witness_resistance = 0.0;
  else if (!(report.min_witness_resistance > 0.0)) {
    throw Error(ErrorCode::DominanceViolated, "witness edge lost positive resistance under R1");
  }
  return report;
}

}  // namespace resist
