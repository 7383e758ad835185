// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "resist/dirichlet.hpp"
#include "resist/forms.hpp"
#include "resist/metric.hpp"
#include "resist/random_graphs.hpp"
#include "resist/semigroup.hpp"
#include "resist/source.hpp"
#include "resist/truncation.hpp"

using namespace resist;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

template <typename Value>
std::function<std::optional<Value>(const BoundaryPoint&)> by_name(std::map<std::string, Value> table) {
  return [table = std::move(table)](const BoundaryPoint& p) -> std::optional<Value> {
    const auto it = table.find(p.name);
    if (it == table.end()) return std::nullopt;
    return it->second;
  };
}

double figure_a_recurrence(int n) {
  double prev = 1.0;
  double cur = 1.5;
  for (int k = 1; k < n; ++k) {
    const double next = (4.0 * cur - prev) / 2.0;
    prev = cur;
    cur = next;
  }
  return 1.0 / cur;
}

Outcome figure_a() {
  const auto start = Clock::now();
  std::vector<int> depths;
  for (int n = 5; n <= 30; ++n) depths.push_back(n);
  const auto report = reproduce_figure_a(depths, 0.01);
  double oracle_error = 0.0;
  for (const auto& row : report.rows) {
    const double expected = figure_a_recurrence(row.depth);
    oracle_error = std::max(oracle_error, std::abs(row.root_value - expected) / expected);
  }
  // dense solve on the unlumped truncation at a small depth
  const auto src = instantiate_generator(FigureASpec{});
  const auto full = truncate(*src, 8, HalfEdgeLength{});
  SolverConfig dense;
  dense.method = SolverMethod::Dense;
  const double unlumped = solve_on(full, BoundaryData::parse("vertex=0,end=1"), dense).values(0);
  const double cross = std::abs(unlumped - figure_a_recurrence(8));
  double min_sup = 1.0;
  for (double s : report.sup_differences) min_sup = std::min(min_sup, s);
  const double elapsed = seconds_since(start);
  const bool pass = report.pass && report.monotone_decreasing && report.ratio_within_tolerance && min_sup > 0.1 &&
                    oracle_error < 1e-9 && cross < 1e-12 && elapsed < 5.0;
  return {pass, fmt("ratio error %.2e (N>=20), min sup-difference %.4f, f(v0;30) = %.3e, oracle rel. error %.1e, "
                    "unlumped cross-check %.1e, %.2f s",
                    report.ratio_error.value_or(NAN), min_sup, report.rows.back().root_value, oracle_error, cross,
                    elapsed)};
}

Outcome spectral_bound() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20261016);
  std::size_t failures = 0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  double oracle_error = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto n = 2 + static_cast<std::size_t>(rng() % 299);
    const auto t = whole_graph(random_tree(n, rng, 0.1, 2.0, HalfEdgeLength{}));
    const auto b = lambda_min_dirichlet(t);
    if (!b.pass || b.eigenvalue < b.lower_bound) ++failures;
    worst_ratio = std::min(worst_ratio, b.eigenvalue / b.lower_bound);
    // generalized eigenproblem K u = lambda M u as an independent oracle
    const auto gen = dirichlet_generator(t);
    const Eigen::MatrixXd k_mat = gen.mu.asDiagonal() * Eigen::MatrixXd(gen.matrix);
    const Eigen::MatrixXd sym = 0.5 * (k_mat + k_mat.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> oracle(sym, Eigen::MatrixXd(gen.mu.asDiagonal()));
    oracle_error = std::max(oracle_error, std::abs(oracle.eigenvalues().minCoeff() - b.eigenvalue) / b.eigenvalue);
  }
  const double elapsed = seconds_since(start);
  return {failures == 0 && oracle_error < 1e-8 && elapsed < 30.0,
          fmt("50 trees, %zu below bound, min lambda/bound %.1f, oracle rel. error %.1e, %.2f s", failures, worst_ratio,
              oracle_error, elapsed)};
}

Outcome adjointness() {
  std::mt19937_64 rng(3);
  double worst = 0.0;
  double worst_row = 0.0;
  const VertexWeightScheme schemes[] = {HalfEdgeLength{}, ConductanceSum{}, ConstantWeight{0.7}};
  for (int k = 0; k < 200; ++k) {
    const auto n = 2 + static_cast<std::size_t>(rng() % 150);
    const auto& scheme = schemes[k % 3];
    const auto g = k % 2 ? random_tree(n, rng, 0.1, 2.0, scheme)
                         : random_connected_graph(n, n / 5, rng, 0.1, 2.0, scheme);
    const auto f = random_function(n, rng);
    const auto h = random_function(n, rng);
    const double b = bilinear_form(g, f, h);
    const double left = mu_inner(g, laplacian_apply(g, f), h);
    const double right = mu_inner(g, f, laplacian_apply(g, h));
    const double scale = std::max(std::abs(b), 1e-300);
    worst = std::max({worst, std::abs(left - b) / scale, std::abs(right - b) / scale});
    worst_row = std::max(worst_row, max_row_sum(assemble_qmatrix<double>(g)));
  }
  return {worst <= 1e-12 && worst_row <= 1e-12,
          fmt("200 triples, max relative error %.2e, max |row sum| %.2e", worst, worst_row)};
}

Outcome continuity() {
  std::mt19937_64 rng(4);
  std::size_t violations = 0;
  std::size_t evaluated = 0;
  double slack = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 10; ++k) {
    const auto n = 20 + static_cast<std::size_t>(rng() % 180);
    const auto g = random_connected_graph(n, n / 4, rng);
    for (int s = 0; s < 100; ++s) {
      const auto f = random_function(n, rng);
      const auto pairs = random_pairs(n, 100, rng);
      const auto r = continuity_modulus_check(g, f, pairs);
      violations += r.violations;
      evaluated += pairs.size();
      slack = std::max(slack, r.max_slack);
    }
  }
  return {violations == 0,
          fmt("%zu pairs on 10 graphs, %zu violations, max slack %.3e", evaluated, violations, slack)};
}

/// Hosts of at most 200 vertices: random trees and graphs plus generator truncations.
std::vector<Truncation> markov_hosts(std::mt19937_64& rng) {
  std::vector<Truncation> hosts;
  for (int k = 0; k < 8; ++k) hosts.push_back(whole_graph(random_tree(20 + rng() % 181, rng)));
  for (int k = 0; k < 6; ++k) {
    auto t = whole_graph(random_connected_graph(20 + rng() % 181, 10, rng));
    if (t.sites.empty()) {
      t.sites.push_back({0, BoundaryPoint::at_vertex(t.host.id(0)), std::nullopt});
      index_sites(t);
    }
    hosts.push_back(std::move(t));
  }
  hosts.push_back(truncate(*instantiate_generator(GeometricTreeSpec{2, 1.0 / 3.0}), 6, HalfEdgeLength{}));
  hosts.push_back(truncate(*instantiate_generator(GeometricTreeSpec{3, 0.5}), 4, HalfEdgeLength{}));
  hosts.push_back(truncate(*instantiate_generator(SiblingTreeSpec{2, 0.5, 0.25}), 6, HalfEdgeLength{}));
  hosts.push_back(truncate(*instantiate_generator(FigureASpec{}), 6, ConductanceSum{}));
  hosts.push_back(truncate(*instantiate_generator(RaySpec{RaySpec::Rule::Geometric, 1.0, 0.5, false}), 60,
                           HalfEdgeLength{}));
  hosts.push_back(truncate(*instantiate_generator(RaySpec{RaySpec::Rule::Harmonic, 1.0, 0.5, false}), 100,
                           ConductanceSum{}));
  return hosts;
}

BoundaryCondition random_mixed(const Truncation& t, std::mt19937_64& rng) {
  std::map<std::string, BoundaryKind> kinds;
  for (const auto& s : t.sites) kinds[s.point.name] = rng() % 2 ? BoundaryKind::Absorbing : BoundaryKind::Reflecting;
  return BoundaryCondition(by_name(kinds));
}

Outcome markov_suite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(5);
  const auto hosts = markov_hosts(rng);
  const std::vector<double> times{0.0, 0.05, 0.2, 0.5, 1.0, 2.0, 5.0};
  MarkovReport worst;
  worst.min_density = std::numeric_limits<double>::infinity();
  double drift = 0.0;
  std::size_t failures = 0;
  std::size_t largest = 0;
  for (const auto& t : hosts) {
    largest = std::max(largest, t.host.num_vertices());
    for (int variant = 0; variant < 2; ++variant) {
      const auto bc = variant == 0 ? random_mixed(t, rng) : BoundaryCondition::uniform(BoundaryKind::Reflecting);
      const auto gen = assemble_generator(t, bc);
      MarkovSamples s;
      s.densities.push_back(uniform_density(gen));
      for (int k = 0; k < 3; ++k) s.densities.push_back(random_function(gen.size(), rng, 0.0, 1.0));
      EvolveOptions opts;
      opts.method = EvolveMethod::Eigen;
      const auto r = markov_checks(gen, s, times, opts);
      failures += r.failures.size();
      worst.min_density = std::min(worst.min_density, r.min_density);
      worst.max_l1_increase = std::max(worst.max_l1_increase, r.max_l1_increase);
      worst.max_linf_increase = std::max(worst.max_linf_increase, r.max_linf_increase);
      worst.max_composition_error = std::max(worst.max_composition_error, r.max_composition_error);
      if (variant == 1) drift = std::max(drift, r.max_mass_drift.value_or(INFINITY));
    }
  }
  const double elapsed = seconds_since(start);
  const bool pass = failures == 0 && hosts.size() == 20 && largest <= 200 && worst.min_density >= -1e-12 &&
                    worst.max_l1_increase <= 1e-10 && worst.max_linf_increase <= 1e-10 && drift <= 1e-10 &&
                    worst.max_composition_error <= 1e-8 && elapsed < 60.0;
  return {pass, fmt("%zu hosts (<= %zu vertices), min density %.1e, l1 increase %.1e, linf increase %.1e, "
                    "mass drift %.1e, composition %.1e, %.2f s",
                    hosts.size(), largest, worst.min_density, worst.max_l1_increase, worst.max_linf_increase, drift,
                    worst.max_composition_error, elapsed)};
}

Outcome form_conditions() {
  std::mt19937_64 rng(6);
  std::size_t samples = 0;
  std::size_t abs_violations = 0;
  std::size_t contraction_violations = 0;
  std::size_t contraction_samples = 0;
  for (int host = 0; host < 10; ++host) {
    const auto t = whole_graph(random_connected_graph(30 + rng() % 120, 15, rng));
    auto tt = t;
    if (tt.sites.empty()) {
      tt.sites.push_back({0, BoundaryPoint::at_vertex(tt.host.id(0)), std::nullopt});
      index_sites(tt);
    }
    const auto gen = assemble_generator(tt, random_mixed(tt, rng));
    MarkovSamples s;
    for (int k = 0; k < 100; ++k) s.functions.push_back(random_function(gen.size(), rng, -1.0, 1.0));
    const auto r = markov_checks(gen, s, {});
    abs_violations += r.abs_violations;
    contraction_violations += r.contraction_violations;
    contraction_samples += r.contraction_samples;
    samples += s.functions.size();
    // the host form B itself
    for (int k = 0; k < 10; ++k) {
      const auto f = random_function(t.host.num_vertices(), rng);
      if (energy(t.host, f.cwiseAbs().eval()) > energy(t.host, f) * (1 + 1e-12)) ++abs_violations;
    }
  }
  return {samples >= 1000 && abs_violations == 0 && contraction_violations == 0,
          fmt("%zu samples, %zu |f| violations, %zu of %zu contraction comparisons violated", samples, abs_violations,
              contraction_violations, contraction_samples)};
}

struct DecayCase {
  std::string label;
  DecayReport report;
  double classical_slack;  // against -||p0|| sum over host edge boundary only
};

DecayCase decay_case(std::string label, const Truncation& t, const BoundaryCondition& bc,
                     const std::vector<std::size_t>& u, const EvolveOptions& opts) {
  const std::vector<double> times{0.0, 0.01, 0.1, 0.5, 1.0, 2.0};
  const auto gen = assemble_generator(t, bc);
  const auto p0 = uniform_density(gen);
  auto report = decay_bound_check(gen, p0, u, times, opts);
  double boundary_c = 0.0;
  for (const auto& e : edge_boundary(t.host, u)) boundary_c += e.conductance();
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& s : report.samples) slack = std::min(slack, s.derivative + p0.cwiseAbs().maxCoeff() * boundary_c);
  return {std::move(label), std::move(report), slack};
}

Outcome decay() {
  std::vector<DecayCase> cases;
  const auto fa_src = instantiate_generator(FigureASpec{});
  const std::vector<EdgeRecord> mid{{VertexId("v", {6}), VertexId("v", {7}), 1.0 / 128.0}};
  auto spine_side = [&](const Truncation& t) {
    const auto labels = components_after_cut(t.host, mid);
    const auto root = labels[t.host.index_of(VertexId("v", {0}))];
    std::vector<std::size_t> u;
    for (std::size_t v = 0; v < t.host.num_vertices(); ++v) {
      if (labels[v] == root) u.push_back(v);
    }
    return u;
  };
  EvolveOptions eig;
  eig.method = EvolveMethod::Eigen;
  EvolveOptions cn;
  cn.method = EvolveMethod::CrankNicolson;
  {
    const auto t = truncate(*fa_src, 12, HalfEdgeLength{});
    cases.push_back(decay_case("figure-a/12 mu0 absorbing", t, BoundaryCondition::uniform(BoundaryKind::Absorbing),
                               spine_side(t), eig));
  }
  {
    const auto t = truncate(*fa_src, 12, ConductanceSum{});
    cases.push_back(decay_case("figure-a/12 deg reflecting pendants", t,
                               BoundaryCondition::parse("vertex=reflecting,end=absorbing"), spine_side(t), cn));
  }
  const auto tree = instantiate_generator(GeometricTreeSpec{2, 1.0 / 3.0});
  const auto t8 = truncate(*tree, 8, HalfEdgeLength{});
  std::vector<std::size_t> left;
  std::vector<std::size_t> ball;
  for (std::size_t v = 0; v < t8.host.num_vertices(); ++v) {
    const auto& id = t8.host.id(v);
    if (id.depth() > 0 && id.coords()[0] == 0) left.push_back(v);
    if (id.depth() <= 4) ball.push_back(v);
  }
  cases.push_back(decay_case("geometric-tree/8 left half, reflecting", t8,
                             BoundaryCondition::uniform(BoundaryKind::Reflecting), left, eig));
  cases.push_back(decay_case("geometric-tree/8 root ball, absorbing", t8,
                             BoundaryCondition::uniform(BoundaryKind::Absorbing), ball, eig));
  cases.push_back(decay_case("geometric-tree/8 left half, left absorbing", t8,
                             BoundaryCondition::parse("prefix:0=absorbing,default=reflecting"), left, eig));

  bool pass = true;
  double identity = 0.0;
  double slack = std::numeric_limits<double>::infinity();
  std::string detail;
  for (const auto& c : cases) {
    pass = pass && c.report.pass && c.report.max_identity_error <= 1e-10 && c.report.min_bound_slack >= -1e-6;
    identity = std::max(identity, c.report.max_identity_error);
    slack = std::min(slack, c.report.min_bound_slack);
  }
  // cases without killing inside U also satisfy the bound over host edge-boundary conductance alone
  const double classical = std::min({cases[1].classical_slack, cases[2].classical_slack, cases[3].classical_slack});
  pass = pass && classical >= -1e-6;
  return {pass, fmt("%zu configurations, max identity error %.1e, min bound slack %.3e, host-boundary slack %.3e",
                    cases.size(), identity, slack, classical)};
}

Outcome solver() {
  std::mt19937_64 rng(8);
  double max_principle = 0.0;
  double scheme_diff = 0.0;
  double method_diff = 0.0;
  double anchor_diff = 0.0;
  SolverConfig cg;
  cg.method = SolverMethod::ConjugateGradient;
  cg.tolerance = 1e-13;
  SolverConfig dense;
  dense.method = SolverMethod::Dense;
  for (int k = 0; k < 20; ++k) {
    const auto g = k % 2 ? random_tree(30 + rng() % 250, rng) : random_connected_graph(30 + rng() % 250, 20, rng);
    auto t = whole_graph(g);
    if (t.sites.size() < 2) continue;
    std::map<std::string, double> values;
    for (const auto& s : t.sites) values[s.point.name] = std::uniform_real_distribution<double>(-1, 1)(rng);
    const BoundaryData data(by_name(values));
    const auto a = solve_on(t, data, cg);
    const auto b = solve_on(t, data, dense);
    method_diff = std::max(method_diff, (a.values - b.values).cwiseAbs().maxCoeff());
    max_principle = std::max({max_principle, a.values.maxCoeff() - a.boundary_max, a.boundary_min - a.values.minCoeff()});
    for (const auto& scheme : {VertexWeightScheme{ConductanceSum{}}, VertexWeightScheme{ConstantWeight{3.0}}}) {
      const auto c = solve_on(whole_graph(g.with_weights(scheme)), data, dense);
      scheme_diff = std::max(scheme_diff, (c.values - b.values).cwiseAbs().maxCoeff());
    }
  }
  for (int k = 0; k < 20; ++k) {
    const auto base = random_tree(40 + rng() % 100, rng);
    auto records = base.edge_records();
    const auto pick = rng() % records.size();
    const auto e = records[pick];
    records.erase(records.begin() + static_cast<long>(pick));
    const VertexId s1("sub", {1});
    const VertexId s2("sub", {2});
    records.push_back({e.u, s1, 0.3 * e.resistance});
    records.push_back({s1, s2, 0.3 * e.resistance});
    records.push_back({s2, e.v, 0.4 * e.resistance});
    const auto g = build_finite(records, HalfEdgeLength{});
    const auto red = series_reduce(g, {e.u, s1, s2, e.v});
    const auto before_t = whole_graph(g);
    std::map<std::string, double> values;
    for (const auto& s : before_t.sites) values[s.point.name] = std::uniform_real_distribution<double>(0, 1)(rng);
    const BoundaryData data(by_name(values));
    const auto before = solve_on(before_t, data, dense);
    const auto after = solve_on(whole_graph(red.reduced), data, dense);
    for (const auto& anchor : {e.u, e.v}) {
      anchor_diff = std::max(anchor_diff, std::abs(before.values(g.index_of(anchor)) -
                                                   after.values(red.reduced.index_of(anchor))));
    }
  }
  const bool pass = max_principle <= 1e-12 && scheme_diff <= 1e-9 && method_diff <= 1e-9 && anchor_diff <= 1e-12;
  return {pass, fmt("max-principle excess %.1e, weight-scheme difference %.1e, CG vs dense %.1e, "
                    "series anchors %.1e",
                    max_principle, scheme_diff, method_diff, anchor_diff)};
}

Outcome cuts() {
  std::mt19937_64 rng(9);
  std::size_t verdicts = 0;
  std::size_t disagreements = 0;
  std::size_t flat_checked = 0;
  std::size_t flat_failures = 0;
  struct Tree {
    int branching;
    double ratio;
    int depth;
  };
  for (const auto& spec : {Tree{2, 1.0 / 3.0, 7}, Tree{3, 0.5, 5}, Tree{4, 0.25, 4}}) {
    const auto src = instantiate_generator(GeometricTreeSpec{spec.branching, spec.ratio});
    const auto t = truncate(*src, spec.depth, ConstantWeight{1.0});
    if (t.host.num_vertices() > 500) return {false, "truncation larger than 500 vertices"};
    const auto letter = [&] { return static_cast<std::int64_t>(rng() % static_cast<unsigned>(spec.branching)); };
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<EdgeRecord> w;
      std::vector<bool> removed(t.host.num_edges(), false);
      const double density = std::uniform_real_distribution<double>(0.0, 0.15)(rng);
      for (std::size_t k = 0; k < t.host.num_edges(); ++k) {
        if (std::bernoulli_distribution(density)(rng)) {
          w.push_back(t.host.record(k));
          removed[k] = true;
        }
      }
      std::vector<std::int64_t> px(rng() % 3);
      std::vector<std::int64_t> py(rng() % 3);
      for (auto& c : px) c = letter();
      for (auto& c : py) c = letter();
      const auto x = BoundaryPoint::ray(px, letter());
      const auto y = BoundaryPoint::ray(py, letter());
      const auto from = t.host.index_of(src->ray_vertex(x, spec.depth));
      const auto to = t.host.index_of(src->ray_vertex(y, spec.depth));
      // exhaustive search over W-avoiding walks
      std::vector<bool> seen(t.host.num_vertices(), false);
      std::function<void(std::size_t)> dfs = [&](std::size_t v) {
        seen[v] = true;
        for (const auto& inc : t.host.incident(v)) {
          if (!removed[inc.edge] && !seen[inc.neighbor]) dfs(inc.neighbor);
        }
      };
      dfs(from);
      const auto verdict = verify_cut_witness(*src, CutWitness{w}, x, y, spec.depth);
      ++verdicts;
      const bool expected_separated = !seen[to];
      bool ok = (verdict.kind == CutVerdict::Kind::Separated) == expected_separated &&
                (verdict.kind == CutVerdict::Kind::NotSeparated) == !expected_separated;
      if (verdict.kind == CutVerdict::Kind::NotSeparated) {
        ok = ok && verdict.path.front() == t.host.id(from) && verdict.path.back() == t.host.id(to);
        for (std::size_t k = 1; k < verdict.path.size() && ok; ++k) {
          const auto e = t.host.find_edge(t.host.index_of(verdict.path[k - 1]), t.host.index_of(verdict.path[k]));
          ok = e.has_value() && !removed[*e];
        }
      }
      if (!ok) ++disagreements;

      // flat function separating two random disjoint vertex sets
      std::vector<std::size_t> a;
      std::vector<std::size_t> b;
      for (std::size_t v = 0; v < t.host.num_vertices(); ++v) {
        const auto r = rng() % 20;
        if (r == 0) a.push_back(v);
        if (r == 1) b.push_back(v);
      }
      if (a.empty() || b.empty()) continue;
      const auto f = separate_compact_sets(t.host, a, b);
      ++flat_checked;
      bool flat_ok = is_flat(t.host, f);
      for (auto v : a) flat_ok = flat_ok && f.values(v) == 1.0;
      for (auto v : b) flat_ok = flat_ok && f.values(v) == 0.0;
      for (Eigen::Index v = 0; v < f.values.size(); ++v) flat_ok = flat_ok && (f.values(v) == 0.0 || f.values(v) == 1.0);
      if (!flat_ok) ++flat_failures;
    }
  }
  return {disagreements == 0 && flat_failures == 0 && flat_checked > 0,
          fmt("%zu verdicts, %zu disagreements with path search; %zu flat functions, %zu invalid", verdicts,
              disagreements, flat_checked, flat_failures)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"figure-a obstruction", figure_a},
      {"spectral lower bound", spectral_bound},
      {"adjointness and form identities", adjointness},
      {"continuity estimate", continuity},
      {"markov semigroup suite", markov_suite},
      {"dirichlet-form conditions", form_conditions},
      {"decay bound", decay},
      {"dirichlet solver correctness", solver},
      {"cut-witness soundness", cuts},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
