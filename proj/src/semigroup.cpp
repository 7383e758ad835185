#include "resist/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "boundary_rules.hpp"
#include "resist/dirichlet.hpp"

namespace resist {

std::string to_string(BoundaryKind kind) {
  return kind == BoundaryKind::Absorbing ? "absorbing" : "reflecting";
}

std::string to_string(EvolveMethod method) {
  switch (method) {
    case EvolveMethod::Auto: return "auto";
    case EvolveMethod::Eigen: return "eigen";
    case EvolveMethod::CrankNicolson: return "crank-nicolson";
  }
  return "unknown";
}

BoundaryCondition BoundaryCondition::uniform(BoundaryKind kind) {
  return BoundaryCondition([kind](const BoundaryPoint&) -> std::optional<BoundaryKind> { return kind; });
}

BoundaryCondition BoundaryCondition::parse(const std::string& text) {
  auto rules = detail::KeyedRules<BoundaryKind>::parse(text, [](const std::string& v) {
    if (v == "absorbing" || v == "a") return BoundaryKind::Absorbing;
    if (v == "reflecting" || v == "r") return BoundaryKind::Reflecting;
    throw Error(ErrorCode::ConfigError, "boundary kind must be absorbing or reflecting, got '" + v + "'");
  });
  return BoundaryCondition([rules](const BoundaryPoint& p) { return rules.at(p); });
}

GeneratorMatrix assemble_generator(const Truncation& truncation, const BoundaryCondition& bc) {
  const auto& g = truncation.host;
  const auto n = g.num_vertices();
  std::vector<BoundaryKind> kind(truncation.sites.size());
  for (std::size_t k = 0; k < truncation.sites.size(); ++k) {
    const auto choice = bc.at(truncation.sites[k].point);
    if (!choice) {
      throw Error(ErrorCode::IncompleteBoundaryCondition, "no boundary condition for " + truncation.sites[k].point.name);
    }
    kind[k] = *choice;
  }

  GeneratorMatrix gen;
  gen.host = g;
  gen.state_of.assign(n, std::nullopt);
  for (std::size_t v = 0; v < n; ++v) {
    const auto site = truncation.site_of[v];
    const bool absorbed_vertex =
        site && !truncation.sites[*site].is_frontier() && kind[*site] == BoundaryKind::Absorbing;
    if (absorbed_vertex) continue;
    gen.state_of[v] = gen.states.size();
    gen.states.push_back(v);
  }
  const auto m = static_cast<Eigen::Index>(gen.states.size());
  gen.mu.resize(m);
  gen.killing = Eigen::VectorXd::Zero(m);
  std::vector<Eigen::Triplet<double>> stiff;
  std::vector<Eigen::Triplet<double>> gen_entries;
  for (Eigen::Index k = 0; k < m; ++k) {
    const auto v = gen.states[static_cast<std::size_t>(k)];
    gen.mu(k) = g.mu(v);
    double diag = 0.0;
    for (const auto& inc : g.incident(v)) {
      const double c = inc.conductance();
      if (const auto w = gen.state_of[inc.neighbor]) {
        diag += c;
        stiff.emplace_back(k, *w, -c);
      } else {
        gen.killing(k) += c;
      }
    }
    if (const auto site = truncation.site_of[v]) {
      const auto& s = truncation.sites[*site];
      if (s.is_frontier() && kind[*site] == BoundaryKind::Absorbing) {
        gen.killing(k) += 1.0 / *s.ray_resistance;
        gen.absorbing_frontier.push_back(v);
      }
    }
    stiff.emplace_back(k, k, diag + gen.killing(k));
  }
  gen.stiffness.resize(m, m);
  gen.stiffness.setFromTriplets(stiff.begin(), stiff.end());
  gen.matrix = gen.mu.cwiseInverse().asDiagonal() * gen.stiffness;
  gen.matrix.makeCompressed();
  return gen;
}

Eigen::VectorXd uniform_density(const GeneratorMatrix& generator) {
  return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(generator.size()), 1.0 / generator.mu.sum());
}

SpectralPropagator::SpectralPropagator(const GeneratorMatrix& generator) {
  sqrt_mu_ = generator.mu.cwiseSqrt();
  const Eigen::VectorXd inv = sqrt_mu_.cwiseInverse();
  Eigen::MatrixXd sym = inv.asDiagonal() * Eigen::MatrixXd(generator.stiffness) * inv.asDiagonal();
  sym = 0.5 * (sym + sym.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::StepFailure, "eigendecomposition failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();

  // A component with no killing has sqrt(mu) as an exact null vector of the symmetrized
  // generator; the computed eigenvalue near zero is off by roughly eps * ||K||, which shows up as mass drift.
  const auto n = static_cast<Eigen::Index>(generator.size());
  std::vector<Eigen::Index> label(static_cast<std::size_t>(n), -1);
  Eigen::Index components = 0;
  std::vector<Eigen::Index> stack;
  for (Eigen::Index start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    label[static_cast<std::size_t>(start)] = components;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (Eigen::SparseMatrix<double>::InnerIterator it(generator.stiffness, v); it; ++it) {
        auto& l = label[static_cast<std::size_t>(it.row())];
        if (it.value() != 0.0 && l < 0) {
          l = components;
          stack.push_back(it.row());
        }
      }
    }
    ++components;
  }
  std::vector<bool> killed(static_cast<std::size_t>(components), false);
  const Eigen::VectorXd row_sums = generator.stiffness * Eigen::VectorXd::Ones(n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const double scale = std::abs(generator.stiffness.coeff(v, v));
    if (generator.killing(v) != 0.0 || std::abs(row_sums(v)) > 1e-12 * scale) {
      killed[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = true;
    }
  }
  std::vector<Eigen::Index> slot_of(static_cast<std::size_t>(components), -1);
  Eigen::Index slots = 0;
  for (Eigen::Index c = 0; c < components; ++c) {
    if (!killed[static_cast<std::size_t>(c)]) slot_of[static_cast<std::size_t>(c)] = slots++;
  }
  kernel_slot_.assign(static_cast<std::size_t>(n), std::nullopt);
  kernel_norm_ = Eigen::VectorXd::Zero(slots);
  for (Eigen::Index v = 0; v < n; ++v) {
    const auto slot = slot_of[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
    if (slot < 0) continue;
    kernel_slot_[static_cast<std::size_t>(v)] = slot;
    kernel_norm_(slot) += generator.mu(v);
  }
  kernel_norm_ = kernel_norm_.cwiseSqrt();
}

Eigen::VectorXd SpectralPropagator::kernel_coefficients(const Eigen::VectorXd& q) const {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(kernel_norm_.size());
  for (Eigen::Index v = 0; v < q.size(); ++v) {
    if (const auto slot = kernel_slot_[static_cast<std::size_t>(v)]) c(*slot) += sqrt_mu_(v) * q(v);
  }
  return c.cwiseQuotient(kernel_norm_);
}

Eigen::VectorXd SpectralPropagator::kernel_vector(const Eigen::VectorXd& coeffs) const {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(sqrt_mu_.size());
  for (Eigen::Index v = 0; v < q.size(); ++v) {
    if (const auto slot = kernel_slot_[static_cast<std::size_t>(v)]) {
      q(v) = sqrt_mu_(v) * coeffs(*slot) / kernel_norm_(*slot);
    }
  }
  return q;
}

Eigen::VectorXd SpectralPropagator::apply(const Eigen::VectorXd& p0, double t) const {
  if (t == 0.0) return p0;
  const Eigen::VectorXd q = sqrt_mu_.cwiseProduct(p0);
  const Eigen::VectorXd kept = kernel_coefficients(q);
  const Eigen::VectorXd rest = q - kernel_vector(kept);
  const Eigen::VectorXd coeffs = eigenvectors_.transpose() * rest;
  Eigen::VectorXd decayed = eigenvectors_ * coeffs.cwiseProduct((-t * eigenvalues_).array().exp().matrix());
  decayed -= kernel_vector(kernel_coefficients(decayed));
  return (decayed + kernel_vector(kept)).cwiseQuotient(sqrt_mu_);
}

namespace {

EvolveMethod resolve(const GeneratorMatrix& generator, const EvolveOptions& options) {
  if (options.method == EvolveMethod::Auto) {
    return generator.size() <= options.eigen_cap ? EvolveMethod::Eigen : EvolveMethod::CrankNicolson;
  }
  if (options.method == EvolveMethod::Eigen && generator.size() > options.eigen_cap) {
    throw Error(ErrorCode::MethodCapExceeded, std::to_string(generator.size()) + " states exceed the eigen cap " +
                                                  std::to_string(options.eigen_cap));
  }
  return options.method;
}

void check_times(const std::vector<double>& times) {
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!(times[k] >= 0.0) || (k > 0 && times[k] < times[k - 1])) {
      throw Error(ErrorCode::StepFailure, "times must be nonnegative and nondecreasing");
    }
  }
}

std::vector<Eigen::VectorXd> crank_nicolson(const GeneratorMatrix& generator, const Eigen::VectorXd& p0,
                                            const std::vector<double>& times, const EvolveOptions& options) {
  double max_rate = 0.0;
  for (Eigen::Index k = 0; k < generator.stiffness.outerSize(); ++k) {
    max_rate = std::max(max_rate, generator.stiffness.coeff(k, k) / generator.mu(k));
  }
  // h * max diag(L) <= 1 keeps both half-step factors nonnegative.
  const double step = max_rate > 0.0 ? std::min(options.max_step, 1.0 / max_rate) : options.max_step;
  if (!times.empty() && times.back() / step > static_cast<double>(options.max_steps)) {
    std::ostringstream msg;
    msg << "Crank-Nicolson step " << step << " needs more than " << options.max_steps
        << " steps; the generator is too stiff";
    throw Error(ErrorCode::StepFailure, msg.str());
  }
  const Eigen::SparseMatrix<double> mass = Eigen::SparseMatrix<double>(generator.mu.asDiagonal());

  std::vector<Eigen::VectorXd> out;
  Eigen::VectorXd p = p0;
  double now = 0.0;
  double cached_h = -1.0;
  Eigen::SparseMatrix<double> lhs;
  Eigen::SparseMatrix<double> rhs_op;
  for (double target : times) {
    while (now < target) {
      const double h = std::min(step, target - now);
      if (h != cached_h) {
        lhs = mass + 0.5 * h * generator.stiffness;
        rhs_op = mass - 0.5 * h * generator.stiffness;
        cached_h = h;
      }
      const Eigen::VectorXd b = rhs_op * p;
      const double scale = std::max(1.0, p.cwiseAbs().maxCoeff());
      auto cg = jacobi_cg(lhs, b, p, options.cg_tolerance * scale, 10 * static_cast<std::size_t>(p.size()) + 100);
      if (!cg.converged) throw Error(ErrorCode::StepFailure, "Crank-Nicolson inner solve did not converge");
      p = std::move(cg.x);
      now = (target - now <= step) ? target : now + h;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<Eigen::VectorXd> evolve(const GeneratorMatrix& generator, const Eigen::VectorXd& p0,
                                    const std::vector<double>& times, const EvolveOptions& options) {
  if (static_cast<std::size_t>(p0.size()) != generator.size()) {
    throw Error(ErrorCode::DomainMismatch, "density size differs from generator state count");
  }
  check_times(times);
  if (resolve(generator, options) == EvolveMethod::CrankNicolson) return crank_nicolson(generator, p0, times, options);
  const SpectralPropagator propagator(generator);
  std::vector<Eigen::VectorXd> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(propagator.apply(p0, t));
  return out;
}

std::vector<Eigen::VectorXd> normal_contractions(const Eigen::VectorXd& f) {
  const double peak = f.size() ? f.cwiseAbs().maxCoeff() : 0.0;
  const double c = 0.5 * peak;
  std::vector<Eigen::VectorXd> out;
  out.push_back(f);
  out.push_back(f.cwiseAbs());
  out.push_back(-f);
  out.push_back(0.5 * f);
  out.push_back(f.cwiseMax(0.0));
  out.push_back(f.cwiseMax(-c).cwiseMin(c));
  out.push_back(f.unaryExpr([c](double x) { return x > c ? x - c : (x < -c ? x + c : 0.0); }));
  out.push_back(f.unaryExpr([c](double x) { return c > 0.0 ? c * std::sin(x / c) : 0.0; }));
  return out;
}

namespace {

double l1_mu(const GeneratorMatrix& g, const Eigen::VectorXd& p) { return (p.cwiseAbs().array() * g.mu.array()).sum(); }
double mass_of(const GeneratorMatrix& g, const Eigen::VectorXd& p) { return (p.array() * g.mu.array()).sum(); }

bool dominated(const GeneratorMatrix& gen, const Eigen::VectorXd& f, const Eigen::VectorXd& g) {
  constexpr double slack = 1e-15;
  const auto n = f.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(g(i)) > std::abs(f(i)) + slack) return false;
  }
  if (n <= 300) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (std::abs(g(i) - g(j)) > std::abs(f(i) - f(j)) + slack) return false;
      }
    }
    return true;
  }
  for (Eigen::Index k = 0; k < gen.stiffness.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(gen.stiffness, k); it; ++it) {
      if (std::abs(g(it.row()) - g(it.col())) > std::abs(f(it.row()) - f(it.col())) + slack) return false;
    }
  }
  return true;
}

}  // namespace

MarkovReport markov_checks(const GeneratorMatrix& generator, const MarkovSamples& samples,
                           const std::vector<double>& times, const EvolveOptions& options,
                           const MarkovTolerances& tol) {
  check_times(times);
  MarkovReport report;
  report.min_density = std::numeric_limits<double>::infinity();
  const bool conservative = generator.killing.size() == 0 || generator.killing.maxCoeff() == 0.0;
  if (conservative) report.max_mass_drift = 0.0;
  const auto method = resolve(generator, options);
  std::optional<SpectralPropagator> propagator;
  if (method == EvolveMethod::Eigen) propagator.emplace(generator);
  auto run = [&](const Eigen::VectorXd& p0) {
    if (propagator) {
      std::vector<Eigen::VectorXd> out;
      for (double t : times) out.push_back(propagator->apply(p0, t));
      return out;
    }
    return evolve(generator, p0, times, options);
  };
  auto fail = [&](std::string what, std::size_t sample, double t, double value) {
    report.failures.push_back({std::move(what), sample, t, value});
  };

  for (std::size_t s = 0; s < samples.densities.size(); ++s) {
    const auto& p0 = samples.densities[s];
    if (static_cast<std::size_t>(p0.size()) != generator.size()) {
      throw Error(ErrorCode::DomainMismatch, "density sample size differs from generator");
    }
    const auto path = run(p0);
    double prev_l1 = l1_mu(generator, p0);
    double prev_linf = p0.cwiseAbs().maxCoeff();
    const double mass0 = mass_of(generator, p0);
    const double scale = std::max(1.0, prev_linf);
    for (std::size_t k = 0; k < times.size(); ++k) {
      const auto& p = path[k];
      const double lo = p.minCoeff();
      report.min_density = std::min(report.min_density, lo);
      if (lo < -tol.positivity * scale) fail("positivity", s, times[k], lo);
      const double l1 = l1_mu(generator, p);
      const double linf = p.cwiseAbs().maxCoeff();
      report.max_l1_increase = std::max(report.max_l1_increase, l1 - prev_l1);
      report.max_linf_increase = std::max(report.max_linf_increase, linf - prev_linf);
      if (l1 - prev_l1 > tol.contraction * std::max(1.0, prev_l1)) fail("l1_contraction", s, times[k], l1 - prev_l1);
      if (linf - prev_linf > tol.contraction * scale) fail("linf_contraction", s, times[k], linf - prev_linf);
      prev_l1 = l1;
      prev_linf = linf;
      if (conservative) {
        const double drift = std::abs(mass_of(generator, p) - mass0);
        report.max_mass_drift = std::max(*report.max_mass_drift, drift);
        if (drift > tol.mass * std::max(1.0, std::abs(mass0))) fail("mass_conservation", s, times[k], drift);
      }
    }
    if (propagator) {
      for (std::size_t k = 1; k < times.size(); ++k) {
        const Eigen::VectorXd composed = propagator->apply(path[k - 1], times[k] - times[k - 1]);
        const double err = (composed - path[k]).cwiseAbs().maxCoeff();
        report.max_composition_error = std::max(report.max_composition_error, err);
        if (err > tol.composition * scale) fail("semigroup_composition", s, times[k], err);
      }
    }
  }

  for (std::size_t s = 0; s < samples.functions.size(); ++s) {
    const auto& f = samples.functions[s];
    if (static_cast<std::size_t>(f.size()) != generator.size()) {
      throw Error(ErrorCode::DomainMismatch, "function sample size differs from generator");
    }
    const double qf = generator.form(f);
    const double qabs = generator.form(f.cwiseAbs());
    if (qabs > qf + tol.form * std::max(1.0, std::abs(qf))) {
      ++report.abs_violations;
      fail("dirichlet_form_abs", s, 0.0, qabs - qf);
    }
    const double full_f = qf + generator.inner(f, f);
    for (const auto& g : normal_contractions(f)) {
      ++report.contraction_samples;
      if (!dominated(generator, f, g)) {
        ++report.contraction_violations;
        fail("normal_contraction_hypothesis", s, 0.0, 0.0);
        continue;
      }
      const double full_g = generator.form(g) + generator.inner(g, g);
      if (full_g > full_f + tol.form * std::max(1.0, std::abs(full_f))) {
        ++report.contraction_violations;
        fail("normal_contraction", s, 0.0, full_g - full_f);
      }
    }
  }
  if (samples.densities.empty()) report.min_density = 0.0;
  return report;
}

std::vector<EdgeRecord> edge_boundary(const WeightedGraph& graph, const std::vector<std::size_t>& u) {
  std::vector<bool> inside(graph.num_vertices(), false);
  for (auto v : u) inside.at(v) = true;
  std::vector<EdgeRecord> out;
  for (std::size_t k = 0; k < graph.num_edges(); ++k) {
    const auto& e = graph.edges()[k];
    if (inside[e.u] != inside[e.v]) out.push_back(graph.record(k));
  }
  return out;
}

DecayReport decay_bound_check(const GeneratorMatrix& generator, const Eigen::VectorXd& p0,
                              const std::vector<std::size_t>& u, const std::vector<double>& times,
                              const EvolveOptions& options, const DecayTolerances& tol) {
  const auto m = static_cast<Eigen::Index>(generator.size());
  Eigen::VectorXd indicator = Eigen::VectorXd::Zero(m);
  for (auto v : u) {
    if (v >= generator.host.num_vertices()) throw Error(ErrorCode::UnknownVertex, "U index out of range");
    if (const auto s = generator.state_of[v]) indicator(static_cast<Eigen::Index>(*s)) = 1.0;
  }
  // Conductance leaving U: state edges with one end in U plus killing inside U.
  struct Crossing {
    Eigen::Index inside;
    Eigen::Index outside;
    double conductance;
  };
  std::vector<Crossing> crossings;
  double exit_conductance = 0.0;
  for (Eigen::Index k = 0; k < generator.stiffness.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(generator.stiffness, k); it; ++it) {
      if (it.row() == it.col()) continue;
      if (indicator(it.row()) == 1.0 && indicator(it.col()) == 0.0) {
        crossings.push_back({it.row(), it.col(), -it.value()});
        exit_conductance += -it.value();
      }
    }
  }
  exit_conductance += indicator.dot(generator.killing);

  const double sup0 = p0.cwiseAbs().maxCoeff();
  DecayReport report;
  report.min_bound_slack = std::numeric_limits<double>::infinity();
  const auto path = evolve(generator, p0, times, options);
  constexpr double delta = 1e-4;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const auto& p = path[k];
    DecaySample s;
    s.time = times[k];
    s.mass = (p.array() * generator.mu.array() * indicator.array()).sum();
    s.derivative = -indicator.dot(generator.stiffness * p);
    double flux = 0.0;
    for (const auto& c : crossings) flux -= c.conductance * (p(c.inside) - p(c.outside));
    flux -= (indicator.array() * generator.killing.array() * p.array()).sum();
    s.flux = flux;
    s.bound = -sup0 * exit_conductance;
    if (times[k] >= delta) {
      const auto around = evolve(generator, p0, {times[k] - delta, times[k] + delta}, options);
      const double lo = (around[0].array() * generator.mu.array() * indicator.array()).sum();
      const double hi = (around[1].array() * generator.mu.array() * indicator.array()).sum();
      s.finite_difference = (hi - lo) / (2.0 * delta);
    }
    const double scale = std::max(1.0, std::abs(s.derivative));
    report.max_identity_error = std::max(report.max_identity_error, std::abs(s.derivative - s.flux) / scale);
    report.min_bound_slack = std::min(report.min_bound_slack, s.derivative - s.bound);
    report.samples.push_back(s);
  }
  if (times.empty()) report.min_bound_slack = 0.0;
  report.pass = report.max_identity_error <= tol.identity && report.min_bound_slack >= -tol.bound;
  return report;
}

namespace {

Eigen::VectorXd to_states(const GeneratorMatrix& g, const Eigen::VectorXd& host_values) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) out(static_cast<Eigen::Index>(k)) = host_values(g.states[k]);
  return out;
}

Eigen::VectorXd to_host(const GeneratorMatrix& g, const Eigen::VectorXd& state_values) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.host.num_vertices()));
  for (std::size_t k = 0; k < g.size(); ++k) out(g.states[k]) = state_values(static_cast<Eigen::Index>(k));
  return out;
}

}  // namespace

BoundaryComparison compare_boundary_conditions(const Truncation& truncation, const BoundaryCondition& first,
                                               const BoundaryCondition& second, const Eigen::VectorXd& probe,
                                               const std::vector<double>& times, const EvolveOptions& options) {
  if (static_cast<std::size_t>(probe.size()) != truncation.host.num_vertices()) {
    throw Error(ErrorCode::DomainMismatch, "probe must be a host vertex function");
  }
  const auto g1 = assemble_generator(truncation, first);
  const auto g2 = assemble_generator(truncation, second);
  const auto path1 = evolve(g1, to_states(g1, probe), times, options);
  const auto path2 = evolve(g2, to_states(g2, probe), times, options);
  BoundaryComparison out;
  out.times = times;
  double largest = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double diff = (to_host(g1, path1[k]) - to_host(g2, path2[k])).cwiseAbs().maxCoeff();
    out.density_difference.push_back(diff);
    out.mass_first.push_back(mass_of(g1, path1[k]));
    out.mass_second.push_back(mass_of(g2, path2[k]));
    largest = std::max(largest, diff);
  }
  const Eigen::VectorXd ones1 = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g1.size()));
  const Eigen::VectorXd ones2 = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g2.size()));
  out.indicator_image_difference = (to_host(g1, g1.apply(ones1)) - to_host(g2, g2.apply(ones2))).cwiseAbs().maxCoeff();
  out.indistinguishable = largest <= 1e-14;
  return out;
}

BoundaryComparison compare_boundary_conditions(const GraphSource& source, const BoundaryCondition& first,
                                               const BoundaryCondition& second, int depth,
                                               const VertexWeightScheme& scheme, const std::vector<double>& times,
                                               const EvolveOptions& options) {
  const auto truncation = truncate(source, depth, scheme);
  const Eigen::VectorXd probe = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(truncation.host.num_vertices()),
                                                          1.0 / truncation.host.total_mu());
  return compare_boundary_conditions(truncation, first, second, probe, times, options);
}

}  // namespace resist
