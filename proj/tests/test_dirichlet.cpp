#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "resist/dirichlet.hpp"
#include "resist/forms.hpp"
#include "resist/metric.hpp"
#include "resist/random_graphs.hpp"
#include "resist/semigroup.hpp"
#include "support.hpp"

using namespace resist;
using testing::edge;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) out(k++) = x;
  return out;
}

/// f(v0) on the depth-N Figure A truncation with pendants 0 and v_N = 1,
/// by running the three-term recurrence forward from f0 = 1, f1 = 3/2.
double figure_a_oracle(int n) {
  double prev = 1.0;
  double cur = 1.5;
  if (n == 0) return 1.0;
  for (int k = 1; k < n; ++k) {
    const double next = (4.0 * cur - prev) / 2.0;
    prev = cur;
    cur = next;
  }
  return 1.0 / cur;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected resist::Error");
  return ErrorCode::CheckFailed;
}

BoundaryData table(std::map<std::string, double> values) {
  return BoundaryData([values](const BoundaryPoint& p) -> std::optional<double> {
    const auto it = values.find(p.name);
    if (it == values.end()) return std::nullopt;
    return it->second;
  });
}

/// Smallest eigenvalue of K u = lambda M u on the interior block, formed directly from edges.
double generalized_lambda_min(const Truncation& t) {
  const auto& g = t.host;
  std::vector<std::size_t> state(g.num_vertices(), SIZE_MAX);
  std::vector<std::size_t> states;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const bool removed = t.site_of[v] && !t.sites[*t.site_of[v]].is_frontier();
    if (!removed) {
      state[v] = states.size();
      states.push_back(v);
    }
  }
  const auto m = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd mass = Eigen::MatrixXd::Zero(m, m);
  for (const auto& e : g.edges()) {
    const double c = 1.0 / e.resistance;
    const auto a = state[e.u];
    const auto b = state[e.v];
    if (a != SIZE_MAX) k(a, a) += c;
    if (b != SIZE_MAX) k(b, b) += c;
    if (a != SIZE_MAX && b != SIZE_MAX) {
      k(a, b) -= c;
      k(b, a) -= c;
    }
  }
  for (const auto& s : t.sites) {
    if (s.is_frontier()) k(state[s.vertex], state[s.vertex]) += 1.0 / *s.ray_resistance;
  }
  for (Eigen::Index i = 0; i < m; ++i) mass(i, i) = g.mu(states[i]);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, mass);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("harmonic residual") {
  const auto t = whole_graph(testing::path({1.0, 1.0}));
  CHECK(harmonic_residual(t, vec({0, 0.5, 1})).values(0) == 0.0);
  CHECK(harmonic_residual(t, vec({0, 1, 1})).values(0) == doctest::Approx(0.5));
  CHECK(harmonic_residual(t, vec({3, 3, 3})).max_abs() == 0.0);
  CHECK(harmonic_residual(t.host, vec({0, 1, 1})).vertices == std::vector<std::size_t>{1});
}

TEST_CASE("small dirichlet problems") {
  const auto t = whole_graph(testing::path({1.0, 1.0}));
  const auto sol = solve_on(t, table({{"vertex:a", 0.0}, {"vertex:c", 1.0}}));
  CHECK(sol.values(1) == doctest::Approx(0.5));

  const std::vector<double> r{1.0, 0.5, 0.25};
  const std::vector<double> c{2.0, -1.0, 5.0};
  const auto s = whole_graph(testing::star(r));
  std::map<std::string, double> data;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    data["vertex:l" + std::to_string(k)] = c[k];
    num += c[k] / r[k];
    den += 1.0 / r[k];
  }
  const auto star = solve_on(s, table(data));
  CHECK(star.values(s.host.index_of(VertexId("c"))) == doctest::Approx(num / den));
}

TEST_CASE("boundary data tables") {
  const auto d = BoundaryData::parse("default=0,end=1,prefix:0=2,prefix:0.1=3,vertex=4,ray:1(0)=5");
  CHECK(*d.at(BoundaryPoint::spine_end()) == 1.0);
  CHECK(*d.at(BoundaryPoint::ray({0, 0}, 1)) == 2.0);
  CHECK(*d.at(BoundaryPoint::ray({0, 1}, 1)) == 3.0);
  CHECK(*d.at(BoundaryPoint::at_vertex(VertexId("q"))) == 4.0);
  CHECK(*d.at(BoundaryPoint::ray({1}, 0)) == 5.0);
  CHECK(*d.at(BoundaryPoint::ray({1}, 1)) == 0.0);
  CHECK(*BoundaryData::parse("ray=7").at(BoundaryPoint::spine_end()) == 7.0);
  CHECK_FALSE(BoundaryData::parse("vertex=1").at(BoundaryPoint::spine_end()).has_value());
  CHECK(code_of([] { BoundaryData::parse("novalue"); }) == ErrorCode::ConfigError);
}

TEST_CASE("figure-a truncation matches the recurrence oracle") {
  CHECK(figure_a_oracle(1) == doctest::Approx(2.0 / 3.0));
  const auto src = instantiate_generator(FigureASpec{});
  const auto data = BoundaryData::parse("vertex=0,end=1");
  for (int n = 1; n <= 10; ++n) {
    const auto full = truncate(*src, n, HalfEdgeLength{});
    const auto lumped = truncate(*src, n, HalfEdgeLength{}, TruncateOptions{true});
    const double a = solve_on(full, data).values(full.host.index_of(VertexId("v", {0})));
    const double b = solve_on(lumped, data).values(lumped.host.index_of(VertexId("v", {0})));
    CHECK(a == doctest::Approx(figure_a_oracle(n)).epsilon(1e-12));
    CHECK(b == doctest::Approx(a).epsilon(1e-12));
  }
  const double r = figure_a_oracle(31) / figure_a_oracle(30);
  CHECK(std::abs(r - (2.0 - std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("figure-a report") {
  std::vector<int> depths;
  for (int n = 5; n <= 30; ++n) depths.push_back(n);
  const auto report = reproduce_figure_a(depths);
  CHECK(report.pass);
  CHECK(report.monotone_decreasing);
  CHECK(report.ratio_within_tolerance);
  CHECK(report.ratio_limit == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(report.published_limits == std::pair<double, double>{1.0, 0.75});
  REQUIRE(report.rows.size() == depths.size());
  for (const auto& row : report.rows) CHECK(row.root_value == doctest::Approx(figure_a_oracle(row.depth)).epsilon(1e-10));
  for (double s : report.sup_differences) CHECK(s > 0.1);
  CHECK(report.rows.back().root_value < 1e-6);
}

TEST_CASE("tower diagnostics") {
  const auto tree = instantiate_generator(GeometricTreeSpec{2, 1.0 / 3.0});
  const auto halves = BoundaryData::parse("prefix:0=1,prefix:1=0");
  const auto tower = harmonic_extension_tower(*tree, halves, {2, 3, 4, 5, 6}, HalfEdgeLength{});
  for (std::size_t k = 0; k < tower.truncations.size(); ++k) {
    CHECK(tower.solutions[k].values(tower.truncations[k].host.index_of(tree->root())) == doctest::Approx(0.5));
  }
  const auto constant = harmonic_extension_tower(*tree, BoundaryData::constant(2.5), {2, 3, 4}, HalfEdgeLength{});
  for (const auto& s : constant.solutions) CHECK((s.values.array() - 2.5).abs().maxCoeff() < 1e-12);
  for (double d : constant.sup_differences) CHECK(d < 1e-12);
}

TEST_CASE("dirichlet errors") {
  const auto t = whole_graph(testing::path({1.0, 1.0}));
  CHECK(code_of([&] { solve_on(t, table({{"vertex:a", 0.0}})); }) == ErrorCode::IncompleteBoundaryData);
  auto split = Truncation{};
  split.host = WeightedGraph::from_parts({VertexId("a"), VertexId("b"), VertexId("c"), VertexId("d")},
                                         Eigen::VectorXd::Ones(4), {{0, 1, 1.0}, {2, 3, 1.0}});
  split.sites.push_back({0, BoundaryPoint::at_vertex(VertexId("a")), std::nullopt});
  index_sites(split);
  CHECK(code_of([&] { solve_on(split, BoundaryData::constant(1.0)); }) == ErrorCode::DisconnectedFromBoundary);
}

TEST_CASE("solver agreement, maximum principle and weight invariance") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_tree(120, rng);
    const auto t = whole_graph(g);
    std::map<std::string, double> values;
    for (const auto& s : t.sites) values[s.point.name] = std::uniform_real_distribution<double>(-2, 3)(rng);
    const auto data = table(values);
    SolverConfig cg;
    cg.method = SolverMethod::ConjugateGradient;
    cg.tolerance = 1e-13;
    SolverConfig dense;
    dense.method = SolverMethod::Dense;
    const auto a = solve_on(t, data, cg);
    const auto b = solve_on(t, data, dense);
    CHECK(a.method == SolverMethod::ConjugateGradient);
    CHECK(b.method == SolverMethod::Dense);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(a.values.maxCoeff() <= a.boundary_max + 1e-12);
    CHECK(a.values.minCoeff() >= a.boundary_min - 1e-12);
    CHECK(harmonic_residual(t, a.values).max_abs() <= 1e-9);

    const auto reweighted = whole_graph(g.with_weights(ConductanceSum{}));
    const auto c = solve_on(reweighted, data, dense);
    CHECK((c.values - b.values).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("spectral lower bound") {
  const auto path = whole_graph(testing::path({1.0, 1.0}, testing::unit_mu()));
  const auto b = lambda_min_dirichlet(path);
  CHECK(b.eigenvalue == doctest::Approx(2.0));
  CHECK(b.lower_bound == doctest::Approx(1.0 / 24.0));
  CHECK(b.pass);

  Truncation single;
  single.host = testing::path({1.0}, testing::unit_mu());
  single.sites.push_back({1, BoundaryPoint::at_vertex(VertexId("b")), std::nullopt});
  index_sites(single);
  CHECK(lambda_min_dirichlet(single).eigenvalue == doctest::Approx(1.0));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = whole_graph(random_tree(20 + rng() % 80, rng));
    const auto r = lambda_min_dirichlet(t);
    CHECK(r.pass);
    CHECK(r.eigenvalue >= r.lower_bound);
    CHECK(r.eigenvalue == doctest::Approx(generalized_lambda_min(t)).epsilon(1e-9));
    CHECK(r.lower_bound == doctest::Approx(1.0 / (4.0 * t.host.total_mu() * diameter(t.host))));
  }
  const auto tree = truncate(*instantiate_generator(GeometricTreeSpec{2, 0.5}), 5, HalfEdgeLength{});
  CHECK(lambda_min_dirichlet(tree).eigenvalue == doctest::Approx(generalized_lambda_min(tree)).epsilon(1e-9));
  CHECK(code_of([&] { lambda_min_dirichlet(tree, 10); }) == ErrorCode::HostTooLarge);
}

TEST_CASE("dirichlet generator equals the all-absorbing semigroup generator") {
  const auto t = truncate(*instantiate_generator(FigureASpec{}), 4, HalfEdgeLength{});
  const auto d = dirichlet_generator(t);
  const auto g = assemble_generator(t, BoundaryCondition::uniform(BoundaryKind::Absorbing));
  CHECK(d.states == g.states);
  CHECK((Eigen::MatrixXd(d.matrix) - Eigen::MatrixXd(g.matrix)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("series reduction") {
  const auto chain = build_finite(std::vector{edge("a", "m", 0.5), edge("m", "b", 0.5)}, HalfEdgeLength{});
  const auto red = series_reduce(chain, {VertexId("a"), VertexId("m"), VertexId("b")});
  CHECK(red.reduced.num_vertices() == 2);
  CHECK(red.reduced.edges()[0].resistance == doctest::Approx(1.0));
  const auto mid = red.expand(chain, vec({2.0, 4.0}));
  CHECK(mid(chain.index_of(VertexId("m"))) == doctest::Approx(3.0));

  const auto three = build_finite(std::vector{edge("a", "p", 0.25), edge("p", "q", 0.25), edge("q", "b", 0.5)},
                                  HalfEdgeLength{});
  const auto r3 = series_reduce(three, {VertexId("a"), VertexId("p"), VertexId("q"), VertexId("b")});
  const auto values = r3.expand(three, vec({0.0, 1.0}));
  CHECK(values(three.index_of(VertexId("p"))) == doctest::Approx(0.25));
  CHECK(values(three.index_of(VertexId("q"))) == doctest::Approx(0.5));

  CHECK(code_of([&] { series_reduce(three, {VertexId("a"), VertexId("b")}); }) == ErrorCode::NotAChain);
  CHECK(code_of([&] { series_reduce(three, {VertexId("a"), VertexId("q"), VertexId("b")}); }) == ErrorCode::NotAChain);
  const auto tri = build_finite(std::vector{edge("a", "m", 1.0), edge("m", "b", 1.0), edge("a", "b", 1.0)}, HalfEdgeLength{});
  CHECK(code_of([&] { series_reduce(tri, {VertexId("a"), VertexId("m"), VertexId("b")}); }) == ErrorCode::NotAChain);
}

TEST_CASE("series reduction preserves anchor values") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto base = random_tree(50, rng);
    auto records = base.edge_records();
    // subdivide one edge into three pieces
    const auto pick = rng() % records.size();
    const auto e = records[pick];
    records.erase(records.begin() + static_cast<long>(pick));
    const VertexId s1("sub", {1});
    const VertexId s2("sub", {2});
    records.push_back({e.u, s1, 0.2 * e.resistance});
    records.push_back({s1, s2, 0.3 * e.resistance});
    records.push_back({s2, e.v, 0.5 * e.resistance});
    const auto g = build_finite(records, HalfEdgeLength{});
    const auto red = series_reduce(g, {e.u, s1, s2, e.v});
    const auto before_t = whole_graph(g);
    const auto after_t = whole_graph(red.reduced);
    std::map<std::string, double> values;
    for (const auto& s : before_t.sites) values[s.point.name] = std::uniform_real_distribution<double>(0, 1)(rng);
    const auto before = solve_on(before_t, table(values));
    const auto after = solve_on(after_t, table(values));
    for (const auto& anchor : {e.u, e.v}) {
      CHECK(std::abs(before.values(g.index_of(anchor)) - after.values(red.reduced.index_of(anchor))) <= 1e-12);
    }
    const auto expanded = red.expand(g, after.values);
    CHECK((expanded - before.values).cwiseAbs().maxCoeff() <= 1e-12);
  }
}
