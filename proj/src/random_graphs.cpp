#include "resist/random_graphs.hpp"

#include <set>

namespace resist {

namespace {

std::vector<VertexId> numbered(std::size_t n) {
  std::vector<VertexId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.emplace_back("n", std::vector<std::int64_t>{static_cast<std::int64_t>(i)});
  return ids;
}

}  // namespace

WeightedGraph random_tree(std::size_t n, std::mt19937_64& rng, double rmin, double rmax,
                          const VertexWeightScheme& scheme) {
  std::uniform_real_distribution<double> length(rmin, rmax);
  std::vector<WeightedGraph::Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const auto parent = pick(rng);
    edges.push_back({parent, i, length(rng)});
  }
  auto ids = numbered(n);
  auto mu = compute_weights(ids, edges, scheme);
  return WeightedGraph::from_parts(std::move(ids), std::move(mu), std::move(edges));
}

WeightedGraph random_connected_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng, double rmin,
                                     double rmax, const VertexWeightScheme& scheme) {
  const auto tree = random_tree(n, rng, rmin, rmax, ConstantWeight{1.0});
  auto edges = tree.edges();
  std::set<std::pair<std::size_t, std::size_t>> present;
  for (const auto& e : edges) present.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  const std::size_t possible = n * (n - 1) / 2;
  std::uniform_real_distribution<double> length(rmin, rmax);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::size_t added = 0;
  while (added < extra && present.size() < possible) {
    auto a = pick(rng);
    auto b = pick(rng);
    if (a == b) continue;
    if (!present.emplace(std::min(a, b), std::max(a, b)).second) continue;
    edges.push_back({a, b, length(rng)});
    ++added;
  }
  auto ids = numbered(n);
  auto mu = compute_weights(ids, edges, scheme);
  return WeightedGraph::from_parts(std::move(ids), std::move(mu), std::move(edges));
}

Eigen::VectorXd random_function(std::size_t n, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> value(lo, hi);
  Eigen::VectorXd f(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = value(rng);
  return f;
}

std::vector<std::pair<std::size_t, std::size_t>> random_pairs(std::size_t n, std::size_t count,
                                                              std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    if (a != b || n == 1) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace resist
