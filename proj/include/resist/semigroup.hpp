#pragma once

#include <functional>
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

enum class BoundaryKind { Absorbing, Reflecting };
std::string to_string(BoundaryKind kind);

/// Absorbing/reflecting choice per boundary point.
class BoundaryCondition {
 public:
  using Rule = std::function<std::optional<BoundaryKind>(const BoundaryPoint&)>;

  BoundaryCondition() = default;
  explicit BoundaryCondition(Rule rule) : rule_(std::move(rule)) {}

  static BoundaryCondition uniform(BoundaryKind kind);
  /// Parses "default=reflecting,end=absorbing,prefix:0=absorbing,...";
  /// key precedence as in BoundaryData::parse.
  static BoundaryCondition parse(const std::string& text);

  std::optional<BoundaryKind> at(const BoundaryPoint& point) const { return rule_ ? rule_(point) : std::nullopt; }

 private:
  Rule rule_;
};

/// L_Omega = M^{-1} K on the state space. K is symmetric; M = diag(mu).
struct GeneratorMatrix {
  WeightedGraph host;
  std::vector<std::size_t> states;              // host index per state
  std::vector<std::optional<std::size_t>> state_of;  // state index per host vertex
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;  // L
  Eigen::SparseMatrix<double> stiffness;        // K, symmetric
  Eigen::VectorXd mu;
  /// Conductance into absorbing sites per state (virtual zero neighbours).
  Eigen::VectorXd killing;
  std::vector<std::size_t> absorbing_frontier;  // host indices

  std::size_t size() const { return states.size(); }
  Eigen::VectorXd apply(const Eigen::VectorXd& f) const { return matrix * f; }
  double inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g) const {
    return (f.array() * g.array() * mu.array()).sum();
  }
  /// <Lf, f>_mu.
  double form(const Eigen::VectorXd& f) const { return f.dot(stiffness * f); }
};

/// Throws IncompleteBoundaryCondition.
GeneratorMatrix assemble_generator(const Truncation& truncation, const BoundaryCondition& bc);

/// Unit mu-mass density constant on the states.
Eigen::VectorXd uniform_density(const GeneratorMatrix& generator);

enum class EvolveMethod { Auto, Eigen, CrankNicolson };
std::string to_string(EvolveMethod method);

struct EvolveOptions {
  EvolveMethod method = EvolveMethod::Auto;
  /// Dense eigendecomposition limit.
  std::size_t eigen_cap = 2000;
  /// Crank-Nicolson step cap; the step is min(max_step, 1 / max diag L).
  double max_step = 0.01;
  double cg_tolerance = 1e-13;
  /// StepFailure when a run would need more Crank-Nicolson steps than this.
  std::size_t max_steps = 1'000'000;
};

/// p(t) = exp(-t L) p0 at each requested time (increasing, >= 0).
std::vector<Eigen::VectorXd> evolve(const GeneratorMatrix& generator, const Eigen::VectorXd& p0,
                                    const std::vector<double>& times, const EvolveOptions& options = {});

/// Dense symmetric propagator reused across many evolutions of one generator.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const GeneratorMatrix& generator);
  Eigen::VectorXd apply(const Eigen::VectorXd& p0, double t) const;
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  /// Coefficients of q along the exact kernel (one unit vector per conservative component).
  Eigen::VectorXd kernel_coefficients(const Eigen::VectorXd& q) const;
  Eigen::VectorXd kernel_vector(const Eigen::VectorXd& coeffs) const;

  Eigen::VectorXd sqrt_mu_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  std::vector<std::optional<Eigen::Index>> kernel_slot_;  // per state; unset off conservative components
  Eigen::VectorXd kernel_norm_;
};

struct MarkovSamples {
  std::vector<Eigen::VectorXd> densities;   // nonnegative
  std::vector<Eigen::VectorXd> functions;   // arbitrary f for the form checks
};

struct CheckFailure {
  std::string invariant;
  std::size_t sample = 0;
  double time = 0.0;
  double value = 0.0;
};

struct MarkovReport {
  double min_density = 0.0;
  double max_l1_increase = 0.0;
  double max_linf_increase = 0.0;
  std::optional<double> max_mass_drift;  // all-reflecting generators only
  double max_composition_error = 0.0;
  std::size_t abs_violations = 0;          // B(|f|,|f|) > B(f,f)
  std::size_t contraction_violations = 0;  // normal contraction comparison
  std::size_t contraction_samples = 0;
  std::vector<CheckFailure> failures;
  bool pass() const { return failures.empty(); }
};

struct MarkovTolerances {
  double positivity = 1e-12;
  double contraction = 1e-10;
  double mass = 1e-10;
  double composition = 1e-8;
  double form = 1e-12;  // relative
};

/// Positivity, l1(mu)/l-infinity contraction, mass conservation, semigroup
/// composition and the two Dirichlet-form conditions.
MarkovReport markov_checks(const GeneratorMatrix& generator, const MarkovSamples& samples,
                           const std::vector<double>& times, const EvolveOptions& options = {},
                           const MarkovTolerances& tolerances = {});

/// Normal contractions of f used by markov_checks: |f|, clamps, shrinkages
/// and scalings with |c| <= 1.
std::vector<Eigen::VectorXd> normal_contractions(const Eigen::VectorXd& f);

/// Edges with exactly one endpoint in U.
std::vector<EdgeRecord> edge_boundary(const WeightedGraph& graph, const std::vector<std::size_t>& u);

struct DecaySample {
  double time = 0.0;
  double mass = 0.0;        // P_U(t)
  double derivative = 0.0;  // -<L p, 1_U>_mu
  double flux = 0.0;        // -sum_{boundary edges} C (p(u) - p(v)) - sum_U killing p
  double bound = 0.0;       // -||p0||_inf * (sum C over boundary edges + killing in U)
  std::optional<double> finite_difference;
};

struct DecayReport {
  std::vector<DecaySample> samples;
  double max_identity_error = 0.0;
  double min_bound_slack = 0.0;  // min(derivative - bound)
  bool pass = false;
};

struct DecayTolerances {
  double identity = 1e-10;
  double bound = 1e-6;
};

/// Mass in U and its decay against the edge-boundary bound. `u` holds host indices.
DecayReport decay_bound_check(const GeneratorMatrix& generator, const Eigen::VectorXd& p0,
                              const std::vector<std::size_t>& u, const std::vector<double>& times,
                              const EvolveOptions& options = {}, const DecayTolerances& tolerances = {});

struct BoundaryComparison {
  std::vector<double> times;
  std::vector<double> density_difference;  // sup-norm per time
  std::vector<double> mass_first;
  std::vector<double> mass_second;
  double indicator_image_difference = 0.0;  // sup |L1 1 - L2 1|
  bool indistinguishable = false;
};

/// Evolves a probe under two boundary conditions on one truncation.
/// Absorbed boundary vertices count as zero density in the comparison.
BoundaryComparison compare_boundary_conditions(const Truncation& truncation, const BoundaryCondition& first,
                                               const BoundaryCondition& second, const Eigen::VectorXd& probe,
                                               const std::vector<double>& times, const EvolveOptions& options = {});

/// Truncates the source, then compares; the probe is the uniform density on the host.
BoundaryComparison compare_boundary_conditions(const GraphSource& source, const BoundaryCondition& first,
                                               const BoundaryCondition& second, int depth,
                                               const VertexWeightScheme& scheme, const std::vector<double>& times,
                                               const EvolveOptions& options = {});

}  // namespace resist
