#include "resist/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include "boundary_rules.hpp"
#include "resist/metric.hpp"

namespace resist {

BoundaryData BoundaryData::constant(double value) {
  return BoundaryData([value](const BoundaryPoint&) -> std::optional<double> { return value; });
}

BoundaryData BoundaryData::parse(const std::string& text) {
  auto rules = detail::KeyedRules<double>::parse(text, [](const std::string& v) {
    try {
      std::size_t used = 0;
      const double x = std::stod(v, &used);
      if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ConfigError, "boundary value is not a number: '" + v + "'");
  });
  return BoundaryData([rules](const BoundaryPoint& p) { return rules.at(p); });
}

std::string to_string(SolverMethod method) {
  switch (method) {
    case SolverMethod::Auto: return "auto";
    case SolverMethod::ConjugateGradient: return "cg";
    case SolverMethod::Dense: return "dense";
  }
  return "unknown";
}

InteriorResidual harmonic_residual(const WeightedGraph& graph, const Eigen::VectorXd& f) {
  if (static_cast<std::size_t>(f.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::DomainMismatch, "vertex function size differs from graph");
  }
  InteriorResidual out;
  std::vector<double> values;
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    if (graph.degree(v) < 2) continue;
    double weight = 0.0;
    double average = 0.0;
    for (const auto& inc : graph.incident(v)) {
      weight += inc.conductance();
      average += inc.conductance() * f(inc.neighbor);
    }
    out.vertices.push_back(v);
    values.push_back(f(v) - average / weight);
  }
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return out;
}

InteriorResidual harmonic_residual(const Truncation& truncation, const Eigen::VectorXd& f) {
  const auto& graph = truncation.host;
  if (static_cast<std::size_t>(f.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::DomainMismatch, "vertex function size differs from host");
  }
  InteriorResidual out;
  std::vector<double> values;
  for (auto v : truncation.interior_vertices()) {
    double weight = 0.0;
    double average = 0.0;
    for (const auto& inc : graph.incident(v)) {
      weight += inc.conductance();
      average += inc.conductance() * f(inc.neighbor);
    }
    out.vertices.push_back(v);
    values.push_back(weight > 0.0 ? f(v) - average / weight : 0.0);
  }
  out.values = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return out;
}

CgResult jacobi_cg(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXd& b, const Eigen::VectorXd& x0,
                   double tolerance, std::size_t max_iterations) {
  CgResult result;
  const Eigen::VectorXd inv_diag = a.diagonal().cwiseInverse();
  result.x = x0;
  Eigen::VectorXd r = b - a * result.x;
  Eigen::VectorXd z = inv_diag.cwiseProduct(r);
  Eigen::VectorXd p = z;
  double rz = r.dot(z);
  result.residual_norm = z.norm();
  while (result.residual_norm > tolerance && result.iterations < max_iterations) {
    const Eigen::VectorXd ap = a * p;
    const double pap = p.dot(ap);
    if (!(pap > 0.0)) break;
    const double alpha = rz / pap;
    result.x += alpha * p;
    r -= alpha * ap;
    z = inv_diag.cwiseProduct(r);
    const double rz_next = r.dot(z);
    p = z + (rz_next / rz) * p;
    rz = rz_next;
    ++result.iterations;
    result.residual_norm = z.norm();
  }
  // Guard against drift of the recursively updated residual.
  result.residual_norm = inv_diag.cwiseProduct(b - a * result.x).norm();
  result.converged = result.residual_norm <= tolerance;
  return result;
}

HarmonicSolution solve_on(const Truncation& truncation, const BoundaryData& data, const SolverConfig& config) {
  return solve_dirichlet({truncation, data, config});
}

HarmonicSolution solve_dirichlet(const DirichletProblem& problem) {
  const auto& t = problem.truncation;
  const auto& g = t.host;
  const auto n = g.num_vertices();
  if (t.sites.empty()) throw Error(ErrorCode::DisconnectedFromBoundary, "truncation has no boundary sites");

  HarmonicSolution solution;
  solution.values = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  solution.boundary_min = std::numeric_limits<double>::infinity();
  solution.boundary_max = -std::numeric_limits<double>::infinity();
  for (const auto& site : t.sites) {
    const auto value = problem.data.at(site.point);
    if (!value) throw Error(ErrorCode::IncompleteBoundaryData, "no boundary value for " + site.point.name);
    solution.values(static_cast<Eigen::Index>(site.vertex)) = *value;
    solution.boundary_min = std::min(solution.boundary_min, *value);
    solution.boundary_max = std::max(solution.boundary_max, *value);
  }

  const auto unknowns = t.interior_vertices();
  if (unknowns.empty()) return solution;

  {
    const auto labels = component_labels(g);
    std::vector<bool> touches(n, false);
    for (const auto& site : t.sites) touches[labels[site.vertex]] = true;
    for (auto v : unknowns) {
      if (!touches[labels[v]]) {
        throw Error(ErrorCode::DisconnectedFromBoundary, "component of " + g.id(v).str() + " has no boundary site");
      }
    }
  }

  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t k = 0; k < unknowns.size(); ++k) slot[unknowns[k]] = static_cast<std::ptrdiff_t>(k);
  const auto m = static_cast<Eigen::Index>(unknowns.size());
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const auto v = unknowns[k];
    double diag = 0.0;
    for (const auto& inc : g.incident(v)) {
      const double c = inc.conductance();
      diag += c;
      if (slot[inc.neighbor] >= 0) triplets.emplace_back(k, slot[inc.neighbor], -c);
      else rhs(static_cast<Eigen::Index>(k)) += c * solution.values(inc.neighbor);
    }
    triplets.emplace_back(k, k, diag);
  }
  Eigen::SparseMatrix<double> a(m, m);
  a.setFromTriplets(triplets.begin(), triplets.end());

  auto method = problem.config.method;
  if (method == SolverMethod::Auto) {
    method = unknowns.size() < problem.config.dense_threshold ? SolverMethod::Dense : SolverMethod::ConjugateGradient;
  }
  solution.method = method;
  Eigen::VectorXd x;
  const Eigen::VectorXd inv_diag = a.diagonal().cwiseInverse();
  if (method == SolverMethod::Dense) {
    // Symmetric Jacobi scaling gives a unit-diagonal SPD matrix.
    const Eigen::VectorXd s = inv_diag.cwiseSqrt();
    const Eigen::MatrixXd scaled = s.asDiagonal() * Eigen::MatrixXd(a) * s.asDiagonal();
    Eigen::LLT<Eigen::MatrixXd> llt(scaled);
    if (llt.info() != Eigen::Success) throw Error(ErrorCode::SolverDiverged, "dense factorization failed");
    x = s.cwiseProduct(llt.solve(s.cwiseProduct(rhs)));
    // One step of iterative refinement.
    const Eigen::VectorXd r = rhs - a * x;
    x += s.cwiseProduct(llt.solve(s.cwiseProduct(r)));
    solution.iterations = 0;
  } else {
    const auto cap = problem.config.max_iterations ? problem.config.max_iterations : 10 * unknowns.size();
    Eigen::VectorXd x0(m);
    const double mid = 0.5 * (solution.boundary_min + solution.boundary_max);
    x0.setConstant(mid);
    auto cg = jacobi_cg(a, rhs, x0, problem.config.tolerance, cap);
    if (!cg.converged) {
      throw Error(ErrorCode::SolverDiverged, "conjugate gradient stopped at residual " +
                                                 std::to_string(cg.residual_norm) + " after " +
                                                 std::to_string(cg.iterations) + " iterations");
    }
    x = std::move(cg.x);
    solution.iterations = cg.iterations;
  }
  for (std::size_t k = 0; k < unknowns.size(); ++k) solution.values(unknowns[k]) = x(static_cast<Eigen::Index>(k));
  solution.residual_norm = inv_diag.cwiseProduct(rhs - a * x).norm();
  return solution;
}

DirichletGenerator dirichlet_generator(const Truncation& truncation) {
  const auto& g = truncation.host;
  DirichletGenerator gen;
  std::vector<std::ptrdiff_t> slot(g.num_vertices(), -1);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto site = truncation.site_of[v];
    if (site && !truncation.sites[*site].is_frontier()) continue;  // boundary vertex: zero value
    slot[v] = static_cast<std::ptrdiff_t>(gen.states.size());
    gen.states.push_back(v);
  }
  const auto m = static_cast<Eigen::Index>(gen.states.size());
  gen.mu.resize(m);
  std::vector<Eigen::Triplet<double>> triplets;
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto v = gen.states[static_cast<std::size_t>(k)];
    gen.mu(k) = g.mu(v);
    double diag = 0.0;
    for (const auto& inc : g.incident(v)) {
      diag += inc.conductance();
      if (slot[inc.neighbor] >= 0) triplets.emplace_back(k, slot[inc.neighbor], -inc.conductance() / g.mu(v));
    }
    if (const auto site = truncation.site_of[v]) diag += 1.0 / *truncation.sites[*site].ray_resistance;
    triplets.emplace_back(k, k, diag / g.mu(v));
  }
  gen.matrix.resize(m, m);
  gen.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return gen;
}

SpectralBound lambda_min_dirichlet(const Truncation& truncation, std::size_t cap) {
  const auto gen = dirichlet_generator(truncation);
  if (gen.states.empty()) throw Error(ErrorCode::BadSpec, "no interior states: every vertex is a boundary vertex");
  if (gen.states.size() > cap) {
    throw Error(ErrorCode::HostTooLarge,
                std::to_string(gen.states.size()) + " states exceed the dense cap " + std::to_string(cap));
  }
  // mu^{1/2} L mu^{-1/2} is symmetric with the same spectrum.
  const Eigen::VectorXd root = gen.mu.cwiseSqrt();
  Eigen::MatrixXd sym = root.asDiagonal() * Eigen::MatrixXd(gen.matrix) * root.cwiseInverse().asDiagonal();
  sym = 0.5 * (sym + sym.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  SpectralBound out;
  out.eigenvalue = solver.eigenvalues()(0);
  out.lower_bound = 1.0 / (4.0 * truncation.host.total_mu() * diameter(truncation.host));
  out.pass = out.eigenvalue >= out.lower_bound;
  return out;
}

TowerResult harmonic_extension_tower(const GraphSource& source, const BoundaryData& data,
                                     const std::vector<int>& depths, const VertexWeightScheme& scheme,
                                     const SolverConfig& config, TruncateOptions options) {
  TowerResult tower;
  for (std::size_t k = 0; k < depths.size(); ++k) {
    if (k > 0 && depths[k] <= depths[k - 1]) throw Error(ErrorCode::BadDepth, "tower depths must increase");
    tower.depths.push_back(depths[k]);
    tower.truncations.push_back(truncate(source, depths[k], scheme, options));
    tower.solutions.push_back(solve_on(tower.truncations.back(), data, config));
    if (k == 0) continue;
    const auto& prev = tower.truncations[k - 1].host;
    const auto& next = tower.truncations[k].host;
    double sup = 0.0;
    for (std::size_t v = 0; v < prev.num_vertices(); ++v) {
      if (const auto w = next.find(prev.id(v))) {
        sup = std::max(sup, std::abs(tower.solutions[k].values(*w) - tower.solutions[k - 1].values(v)));
      }
    }
    tower.sup_differences.push_back(sup);
  }
  return tower;
}

SeriesReduction series_reduce(const WeightedGraph& graph, const std::vector<VertexId>& chain) {
  if (chain.size() < 3) throw Error(ErrorCode::NotAChain, "a chain needs two anchors and an interior vertex");
  std::vector<std::size_t> idx;
  for (const auto& v : chain) idx.push_back(graph.index_of(v));
  if (idx.front() == idx.back()) throw Error(ErrorCode::NotAChain, "anchors coincide");
  std::vector<bool> removed_vertex(graph.num_vertices(), false);
  std::vector<bool> removed_edge(graph.num_edges(), false);
  SeriesReduction out;
  out.anchor_a = chain.front();
  out.anchor_b = chain.back();
  double arclength = 0.0;
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    const auto e = graph.find_edge(idx[k], idx[k + 1]);
    if (!e) throw Error(ErrorCode::NotAChain, chain[k].str() + " and " + chain[k + 1].str() + " are not adjacent");
    removed_edge[*e] = true;
    arclength += graph.edges()[*e].resistance;
    if (k + 1 < idx.size() - 1) {
      const auto c = idx[k + 1];
      if (graph.degree(c) != 2 || removed_vertex[c] || c == idx.front() || c == idx.back()) {
        throw Error(ErrorCode::NotAChain, chain[k + 1].str() + " is not an interior degree-2 vertex");
      }
      removed_vertex[c] = true;
      out.chain.emplace_back(chain[k + 1], arclength);
    }
  }
  if (graph.find_edge(idx.front(), idx.back())) {
    throw Error(ErrorCode::NotAChain, "anchors already adjacent; reduction would create a parallel edge");
  }
  out.length = arclength;

  std::vector<VertexId> ids;
  std::vector<double> mu;
  std::vector<std::size_t> remap(graph.num_vertices(), 0);
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    if (removed_vertex[v]) continue;
    remap[v] = ids.size();
    ids.push_back(graph.id(v));
    mu.push_back(graph.mu(v));
  }
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    if (removed_edge[k]) continue;
    const auto& e = graph.edges()[k];
    edges.push_back({remap[e.u], remap[e.v], e.resistance});
  }
  edges.push_back({remap[idx.front()], remap[idx.back()], arclength});
  out.reduced = WeightedGraph::from_parts(std::move(ids), Eigen::Map<Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size())),
                                          std::move(edges));
  return out;
}

Eigen::VectorXd SeriesReduction::expand(const WeightedGraph& original, const Eigen::VectorXd& reduced_values) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(original.num_vertices()));
  for (std::size_t v = 0; v < original.num_vertices(); ++v) {
    if (const auto r = reduced.find(original.id(v))) out(static_cast<Eigen::Index>(v)) = reduced_values(*r);
  }
  const double fa = reduced_values(reduced.index_of(anchor_a));
  const double fb = reduced_values(reduced.index_of(anchor_b));
  for (const auto& [id, s] : chain) out(original.index_of(id)) = fa + (fb - fa) * s / length;
  return out;
}

FigureAReport reproduce_figure_a(const std::vector<int>& depths, double ratio_tolerance) {
  FigureAReport report;
  report.ratio_limit = 2.0 - std::sqrt(2.0);
  const auto source = instantiate_generator(FigureASpec{});
  BoundaryData data([](const BoundaryPoint& p) -> std::optional<double> {
    return p.kind == BoundaryPoint::Kind::Vertex ? 0.0 : 1.0;
  });
  SolverConfig config;
  config.method = SolverMethod::Dense;
  TruncateOptions options;
  options.lump_leaves = true;
  const auto tower = harmonic_extension_tower(*source, data, depths, ConstantWeight{1.0}, config, options);
  report.sup_differences = tower.sup_differences;
  report.monotone_decreasing = true;
  double worst = 0.0;
  bool any_ratio = false;
  for (std::size_t k = 0; k < depths.size(); ++k) {
    FigureARow row;
    row.depth = depths[k];
    row.root_value = tower.solutions[k].values(tower.truncations[k].host.index_of(VertexId("v", {0})));
    if (k > 0) {
      const auto& prev = report.rows.back();
      row.ratio = std::pow(row.root_value / prev.root_value, 1.0 / (row.depth - prev.depth));
      if (!(row.root_value < prev.root_value)) report.monotone_decreasing = false;
      if (row.depth >= 20) {
        any_ratio = true;
        worst = std::max(worst, std::abs(*row.ratio - report.ratio_limit));
      }
    }
    report.rows.push_back(row);
  }
  if (any_ratio) report.ratio_error = worst;
  report.ratio_within_tolerance = !any_ratio || worst <= ratio_tolerance;
  report.pass = report.monotone_decreasing && report.ratio_within_tolerance;
  return report;
}

}  // namespace resist
