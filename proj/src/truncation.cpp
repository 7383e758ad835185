#include "resist/truncation.hpp"

#include <deque>
#include <unordered_map>

namespace resist {

std::vector<std::size_t> Truncation::frontier_vertices() const {
  std::vector<std::size_t> out;
  for (const auto& s : sites) {
    if (s.is_frontier()) out.push_back(s.vertex);
  }
  return out;
}

std::vector<std::size_t> Truncation::interior_vertices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < host.num_vertices(); ++v) {
    if (!is_site(v)) out.push_back(v);
  }
  return out;
}

void index_sites(Truncation& truncation) {
  truncation.site_of.assign(truncation.host.num_vertices(), std::nullopt);
  for (std::size_t k = 0; k < truncation.sites.size(); ++k) truncation.site_of[truncation.sites[k].vertex] = k;
}

Truncation truncate(const GraphSource& source, int depth, const VertexWeightScheme& scheme, TruncateOptions options) {
  if (depth < 1) throw Error(ErrorCode::BadDepth, "truncation depth must be >= 1, got " + std::to_string(depth));
  auto query = [&](const VertexId& v) {
    return options.lump_leaves ? source.lumped_neighbors(v) : source.neighbors(v);
  };

  std::vector<VertexId> ids;
  std::vector<int> hops;
  std::unordered_map<VertexId, std::size_t, VertexIdHash> index;
  std::vector<std::vector<Neighbor>> adjacency;

  ids.push_back(source.root());
  hops.push_back(0);
  index.emplace(ids[0], 0);
  for (std::size_t head = 0; head < ids.size(); ++head) {
    adjacency.push_back(query(ids[head]));
    if (hops[head] == depth) continue;
    for (const auto& nb : adjacency[head]) {
      if (index.emplace(nb.vertex, ids.size()).second) {
        ids.push_back(nb.vertex);
        hops.push_back(hops[head] + 1);
      }
    }
  }

  std::vector<WeightedGraph::Edge> edges;
  std::vector<bool> frontier(ids.size(), false);
  for (std::size_t v = 0; v < ids.size(); ++v) {
    for (const auto& nb : adjacency[v]) {
      auto it = index.find(nb.vertex);
      if (it == index.end()) {
        frontier[v] = true;
        continue;
      }
      if (v < it->second) edges.push_back({v, it->second, nb.resistance});
    }
  }

  Truncation t;
  auto mu = compute_weights(ids, edges, scheme);
  t.host = WeightedGraph::from_parts(std::move(ids), std::move(mu), std::move(edges));
  t.depth = depth;
  t.acyclic = source.acyclic();
  for (std::size_t v = 0; v < t.host.num_vertices(); ++v) {
    const auto& id = t.host.id(v);
    if (frontier[v]) {
      const auto next = source.ray_successor(id);
      t.sites.push_back({v, source.ray_class(id), next.resistance});
    } else if (t.host.degree(v) == 1) {
      t.sites.push_back({v, BoundaryPoint::at_vertex(id), std::nullopt});
    }
  }
  index_sites(t);
  return t;
}

Truncation whole_graph(WeightedGraph graph) {
  Truncation t;
  t.host = std::move(graph);
  const auto labels = component_labels(t.host);
  const std::size_t components = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  t.acyclic = t.host.num_edges() + components == t.host.num_vertices();
  for (std::size_t v = 0; v < t.host.num_vertices(); ++v) {
    if (t.host.degree(v) == 1) t.sites.push_back({v, BoundaryPoint::at_vertex(t.host.id(v)), std::nullopt});
  }
  t.depth = 0;
  index_sites(t);
  return t;
}

}  // namespace resist
