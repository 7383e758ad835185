#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "resist/graph.hpp"

namespace resist {

/// Uniform random recursive tree on n vertices "n:0".."n:{n-1}"; vertex i
/// attaches to a uniformly chosen earlier vertex. Resistances uniform in [rmin, rmax].
WeightedGraph random_tree(std::size_t n, std::mt19937_64& rng, double rmin = 0.1, double rmax = 2.0,
                          const VertexWeightScheme& scheme = HalfEdgeLength{});

/// Random tree plus `extra` chords between distinct non-adjacent vertices.
WeightedGraph random_connected_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng, double rmin = 0.1,
                                     double rmax = 2.0, const VertexWeightScheme& scheme = HalfEdgeLength{});

Eigen::VectorXd random_function(std::size_t n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0);

std::vector<std::pair<std::size_t, std::size_t>> random_pairs(std::size_t n, std::size_t count,
                                                              std::mt19937_64& rng);

}  // namespace resist
