#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "resist/error.hpp"
#include "resist/graph.hpp"
#include "resist/metric.hpp"

namespace resist {

template <typename Scalar>
using VertexVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Q-matrix of the Laplacian, rows and columns in host vertex order.
template <typename Scalar = double>
using QMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

namespace detail {
template <typename Derived>
void require_domain(const WeightedGraph& graph, const Eigen::MatrixBase<Derived>& f) {
  if (static_cast<std::size_t>(f.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::DomainMismatch, "vertex function has " + std::to_string(f.size()) +
                                               " entries, graph has " + std::to_string(graph.num_vertices()));
  }
}
}  // namespace detail

/// B(f,g) = sum over edges of C(u,v) (f(u) - f(v)) (g(u) - g(v)).
template <typename DerivedF, typename DerivedG>
typename DerivedF::Scalar bilinear_form(const WeightedGraph& graph, const Eigen::MatrixBase<DerivedF>& f,
                                        const Eigen::MatrixBase<DerivedG>& g) {
  using Scalar = typename DerivedF::Scalar;
  detail::require_domain(graph, f);
  detail::require_domain(graph, g);
  Scalar sum(0);
  for (const auto& e : graph.edges()) {
    sum += Scalar(e.conductance()) * (f(e.u) - f(e.v)) * (g(e.u) - g(e.v));
  }
  return sum;
}

template <typename Derived>
typename Derived::Scalar energy(const WeightedGraph& graph, const Eigen::MatrixBase<Derived>& f) {
  return bilinear_form(graph, f, f);
}

/// <f, g>_mu = sum f g mu.
template <typename DerivedF, typename DerivedG>
typename DerivedF::Scalar mu_inner(const WeightedGraph& graph, const Eigen::MatrixBase<DerivedF>& f,
                                   const Eigen::MatrixBase<DerivedG>& g) {
  using Scalar = typename DerivedF::Scalar;
  detail::require_domain(graph, f);
  detail::require_domain(graph, g);
  return (f.array() * g.array() * graph.mu().template cast<Scalar>().array()).sum();
}

/// (Delta_mu f)(v) = mu(v)^{-1} sum_{u~v} C(u,v) (f(v) - f(u)).
template <typename Derived>
VertexVector<typename Derived::Scalar> laplacian_apply(const WeightedGraph& graph,
                                                       const Eigen::MatrixBase<Derived>& f) {
  using Scalar = typename Derived::Scalar;
  detail::require_domain(graph, f);
  VertexVector<Scalar> out = VertexVector<Scalar>::Zero(f.size());
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    Scalar acc(0);
    for (const auto& inc : graph.incident(v)) acc += Scalar(inc.conductance()) * (f(v) - f(inc.neighbor));
    out(v) = acc / Scalar(graph.mu(v));
  }
  return out;
}

/// Q(w,w) = mu(w)^{-1} sum C(u,w), Q(v,w) = -mu(v)^{-1} C(v,w) for v ~ w.
template <typename Scalar = double>
QMatrix<Scalar> assemble_qmatrix(const WeightedGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.num_vertices());
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(graph.num_vertices() + 2 * graph.num_edges());
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    const Scalar inv_mu = Scalar(1) / Scalar(graph.mu(v));
    Scalar diag(0);
    for (const auto& inc : graph.incident(v)) {
      diag += Scalar(inc.conductance());
      triplets.emplace_back(v, inc.neighbor, -inv_mu * Scalar(inc.conductance()));
    }
    triplets.emplace_back(v, v, inv_mu * diag);
  }
  QMatrix<Scalar> q(n, n);
  q.setFromTriplets(triplets.begin(), triplets.end());
  q.makeCompressed();
  return q;
}

/// Largest |row sum| of a Q-matrix.
template <typename Scalar>
Scalar max_row_sum(const QMatrix<Scalar>& q) {
  Scalar worst(0);
  for (Eigen::Index r = 0; r < q.outerSize(); ++r) {
    Scalar sum(0);
    for (typename QMatrix<Scalar>::InnerIterator it(q, r); it; ++it) sum += it.value();
    worst = std::max(worst, Scalar(std::abs(sum)));
  }
  return worst;
}

/// sqrt(sum f^2 mu + B(f,f)).
template <typename Derived>
typename Derived::Scalar h1_norm(const WeightedGraph& graph, const Eigen::MatrixBase<Derived>& f) {
  using std::sqrt;
  return sqrt(mu_inner(graph, f, f) + energy(graph, f));
}

struct ContinuityReport {
  /// max over pairs of |f(w) - f(v)|^2 - 4 B(f,f) d(v,w); never positive.
  double max_slack = 0.0;
  std::size_t violations = 0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
};

/// Evaluates the modulus |f(w) - f(v)|^2 <= 4 B(f,f) d(v,w) on sampled pairs.
/// `relative_tolerance` scales the slack allowed before counting a violation.
/// Throws Disconnected.
template <typename Derived>
ContinuityReport continuity_modulus_check(const WeightedGraph& graph, const Eigen::MatrixBase<Derived>& f,
                                          std::span<const std::pair<std::size_t, std::size_t>> pairs,
                                          double relative_tolerance = 1e-12) {
  detail::require_domain(graph, f);
  const double b = static_cast<double>(energy(graph, f));
  ContinuityReport report;
  report.max_slack = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::size_t, std::size_t>> sorted(pairs.begin(), pairs.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](auto x, auto y) { return x.first < y.first; });
  std::vector<Distance> dist;
  std::size_t current = graph.num_vertices();
  for (const auto& [v, w] : sorted) {
    if (v != current) {
      dist = distances_from(graph, v);
      current = v;
    }
    if (!dist[w]) throw Error(ErrorCode::Disconnected, "no path between sampled vertices");
    const double diff = static_cast<double>(f(w) - f(v));
    const double rhs = 4.0 * b * *dist[w];
    const double slack = diff * diff - rhs;
    if (slack > report.max_slack) {
      report.max_slack = slack;
      report.worst_pair = {v, w};
    }
    if (slack > relative_tolerance * std::max(1.0, rhs)) ++report.violations;
  }
  if (sorted.empty()) report.max_slack = 0.0;
  return report;
}

}  // namespace resist
