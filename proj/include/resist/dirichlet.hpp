#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "resist/boundary.hpp"
#include "resist/graph.hpp"
#include "resist/source.hpp"
#include "resist/truncation.hpp"

namespace resist {

/// Boundary values, looked up per boundary point.
class BoundaryData {
 public:
  using Rule = std::function<std::optional<double>(const BoundaryPoint&)>;

  BoundaryData() = default;
  explicit BoundaryData(Rule rule) : rule_(std::move(rule)) {}

  static BoundaryData constant(double value);
  /// Parses "default=0,end=1,vertex=0,prefix:0=1,<point name>=v".
  /// Keys are tried in the order: exact name, longest matching prefix,
  /// "end"/"vertex" kind keys, "default".
  static BoundaryData parse(const std::string& text);

  std::optional<double> at(const BoundaryPoint& point) const { return rule_ ? rule_(point) : std::nullopt; }

 private:
  Rule rule_;
};

enum class SolverMethod { Auto, ConjugateGradient, Dense };
std::string to_string(SolverMethod method);

struct SolverConfig {
  SolverMethod method = SolverMethod::Auto;
  /// Stopping bound on the 2-norm of the harmonic residual.
  double tolerance = 1e-10;
  /// 0 means 10 * unknowns.
  std::size_t max_iterations = 0;
  /// Auto uses dense factorization below this many unknowns.
  std::size_t dense_threshold = 2000;
};

struct DirichletProblem {
  Truncation truncation;
  BoundaryData data;
  SolverConfig config;
};

struct HarmonicSolution {
  Eigen::VectorXd values;  // on every host vertex
  double residual_norm = 0.0;
  std::size_t iterations = 0;
  SolverMethod method = SolverMethod::Dense;
  double boundary_min = 0.0;
  double boundary_max = 0.0;
};

/// Residual f(v) - (sum C f(u)) / (sum C) at the vertices of degree >= 2.
struct InteriorResidual {
  std::vector<std::size_t> vertices;
  Eigen::VectorXd values;
  double max_abs() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }
};
InteriorResidual harmonic_residual(const WeightedGraph& graph, const Eigen::VectorXd& f);
/// Same, at the unpinned vertices of a truncation.
InteriorResidual harmonic_residual(const Truncation& truncation, const Eigen::VectorXd& f);

/// Harmonic extension of boundary data into the interior of the truncation.
/// Throws IncompleteBoundaryData, DisconnectedFromBoundary, SolverDiverged.
HarmonicSolution solve_dirichlet(const DirichletProblem& problem);

/// Preconditioned conjugate gradient on an SPD system, stopping when the
/// Jacobi-scaled residual D^{-1}(b - Ax) has 2-norm <= tolerance.
struct CgResult {
  Eigen::VectorXd x;
  double residual_norm = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};
CgResult jacobi_cg(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXd& b, const Eigen::VectorXd& x0,
                   double tolerance, std::size_t max_iterations);

/// Dirichlet generator with every boundary site absorbing: states are the
/// host vertices other than boundary vertices; edges into boundary vertices
/// and truncated ray edges become killing terms.
struct DirichletGenerator {
  std::vector<std::size_t> states;  // host indices
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd mu;
};
DirichletGenerator dirichlet_generator(const Truncation& truncation);

struct SpectralBound {
  double eigenvalue = 0.0;
  double lower_bound = 0.0;  // 1 / (4 mu(host) diam(host))
  bool pass = false;
};

/// Smallest eigenvalue of the all-absorbing generator against the lower
/// bound 1/(4 mu(host) diam(host)). Throws HostTooLarge above `cap` states.
SpectralBound lambda_min_dirichlet(const Truncation& truncation, std::size_t cap = 2000);

struct TowerResult {
  std::vector<int> depths;
  std::vector<Truncation> truncations;
  std::vector<HarmonicSolution> solutions;
  /// sup |f_{k+1} - f_k| over vertices shared by consecutive hosts.
  std::vector<double> sup_differences;
};

HarmonicSolution solve_on(const Truncation& truncation, const BoundaryData& data, const SolverConfig& config = {});

/// Harmonic extensions on increasing truncations with Cauchy diagnostics.
TowerResult harmonic_extension_tower(const GraphSource& source, const BoundaryData& data,
                                     const std::vector<int>& depths, const VertexWeightScheme& scheme,
                                     const SolverConfig& config = {}, TruncateOptions options = {});

struct SeriesReduction {
  WeightedGraph reduced;
  VertexId anchor_a;
  VertexId anchor_b;
  double length = 0.0;
  /// Removed chain vertices with their arclength from anchor_a.
  std::vector<std::pair<VertexId, double>> chain;

  /// Values on the original graph from values on the reduced graph.
  Eigen::VectorXd expand(const WeightedGraph& original, const Eigen::VectorXd& reduced_values) const;
};

/// Replaces the chain anchor_a, c_1, ..., c_k, anchor_b of degree-2 interior
/// vertices by one edge of the summed resistance. Throws NotAChain.
SeriesReduction series_reduce(const WeightedGraph& graph, const std::vector<VertexId>& chain);

struct FigureARow {
  int depth = 0;
  double root_value = 0.0;
  std::optional<double> ratio;  // root_value(N) / root_value(previous N)
};

struct FigureAReport {
  std::vector<FigureARow> rows;
  std::vector<double> sup_differences;
  bool monotone_decreasing = false;
  /// Largest |ratio - (2 - sqrt 2)| over consecutive depths N >= 20.
  std::optional<double> ratio_error;
  bool ratio_within_tolerance = false;
  double ratio_limit = 0.0;
  /// The published pair of limits for f(v_n), recorded and not asserted.
  std::pair<double, double> published_limits{1.0, 0.75};
  bool pass = false;
};

/// Figure A truncations with pendants = 0 and the spine end = 1.
FigureAReport reproduce_figure_a(const std::vector<int>& depths, double ratio_tolerance = 0.01);

}  // namespace resist
