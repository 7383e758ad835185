#pragma once

#include <string>
#include <vector>

#include "resist/graph.hpp"

namespace testing {

using resist::EdgeRecord;
using resist::VertexId;

inline EdgeRecord edge(const std::string& u, const std::string& v, double r) { return {VertexId(u), VertexId(v), r}; }

/// a-b-c-... with the given resistances.
inline resist::WeightedGraph path(const std::vector<double>& r,
                                  const resist::VertexWeightScheme& scheme = resist::HalfEdgeLength{}) {
  std::vector<EdgeRecord> edges;
  for (std::size_t k = 0; k < r.size(); ++k) {
    edges.push_back(edge(std::string(1, static_cast<char>('a' + k)), std::string(1, static_cast<char>('a' + k + 1)), r[k]));
  }
  return resist::build_finite(edges, scheme);
}

/// Center "c" joined to leaves "l0".."l{k-1}".
inline resist::WeightedGraph star(const std::vector<double>& r,
                                  const resist::VertexWeightScheme& scheme = resist::HalfEdgeLength{}) {
  std::vector<EdgeRecord> edges;
  for (std::size_t k = 0; k < r.size(); ++k) edges.push_back(edge("c", "l" + std::to_string(k), r[k]));
  return resist::build_finite(edges, scheme);
}

inline resist::ConstantWeight unit_mu() { return resist::ConstantWeight{1.0}; }

}  // namespace testing
