#include "resist/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "resist/dirichlet.hpp"
#include "resist/forms.hpp"
#include "resist/graph_io.hpp"
#include "resist/metric.hpp"
#include "resist/random_graphs.hpp"
#include "resist/semigroup.hpp"
#include "resist/source.hpp"
#include "resist/truncation.hpp"

namespace resist::cli {

namespace {

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find(sep, start);
    if (stop == std::string_view::npos) stop = text.size();
    auto item = trim(text.substr(start, stop - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = stop + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& s, const char* what) {
  T value{};
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorCode::ConfigError, std::string("bad ") + what + " '" + s + "'");
  return value;
}

}  // namespace

std::vector<int> expand_depths(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_number<int>(item, "depth"));
      continue;
    }
    const int lo = parse_number<int>(item.substr(0, dots), "depth");
    const int hi = parse_number<int>(item.substr(dots + 2), "depth");
    if (hi < lo) throw Error(ErrorCode::ConfigError, "empty depth range '" + item + "'");
    for (int d = lo; d <= hi; ++d) out.push_back(d);
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, "no depths given");
  return out;
}

std::vector<double> parse_times(std::string_view text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_number<double>(item, "time"));
      continue;
    }
    const auto colon = item.find(':', dots);
    if (colon == std::string::npos) throw Error(ErrorCode::ConfigError, "time range needs a step: '" + item + "'");
    const double lo = parse_number<double>(item.substr(0, dots), "time");
    const double hi = parse_number<double>(item.substr(dots + 2, colon - dots - 2), "time");
    const double step = parse_number<double>(item.substr(colon + 1), "time step");
    if (!(step > 0.0) || hi < lo) throw Error(ErrorCode::ConfigError, "bad time range '" + item + "'");
    const auto count = static_cast<long>(std::llround((hi - lo) / step));
    for (long k = 0; k <= count; ++k) out.push_back(lo + static_cast<double>(k) * step);
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, "no times given");
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] < 0.0 || (k > 0 && out[k] < out[k - 1])) {
      throw Error(ErrorCode::ConfigError, "times must be nonnegative and nondecreasing");
    }
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

namespace {

namespace fs = std::filesystem;

/// Runs f(0..count-1) on up to `jobs` threads; results stay in index order.
template <typename F>
auto parallel_map(std::size_t count, unsigned jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using Result = decltype(f(std::size_t{}));
  std::vector<std::optional<Result>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto k = next++; k < count; k = next++) {
      try {
        slots[k].emplace(f(k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const auto threads = std::min<std::size_t>(std::max(1u, jobs), count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<Result> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

struct Context {
  RunConfig cfg;
  VertexWeightScheme scheme;
  SourcePtr source;
  bool random_input = false;
  bool figure_a = false;
  std::ostream* out = nullptr;
};

bool is_random(const GeneratorSpec& spec) {
  return std::holds_alternative<RandomTreeSpec>(spec) || std::holds_alternative<RandomGraphSpec>(spec);
}

void resolve_input(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (!cfg.generator.empty() && !cfg.graph.empty()) {
    throw Error(ErrorCode::ConfigError, "give either --generator or --graph, not both");
  }
  const std::string text = cfg.generator.empty() ? cfg.graph : cfg.generator;
  if (text.empty()) throw Error(ErrorCode::ConfigError, "an input is required: --generator or --graph");
  std::optional<GeneratorSpec> spec;
  try {
    spec = parse_generator_spec(text);
  } catch (const Error&) {
    if (!cfg.generator.empty()) throw;
  }
  if (!spec) {
    ctx.source = finite_source(load_graph(text, ctx.scheme));
    return;
  }
  ctx.random_input = is_random(*spec);
  ctx.figure_a = std::holds_alternative<FigureASpec>(*spec);
  if (ctx.random_input && !cfg.seed) throw Error(ErrorCode::ConfigError, "--seed is required for random generators");
  try {
    ctx.source = instantiate_generator(*spec, cfg.seed.value_or(0));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadSpec) throw Error(ErrorCode::ConfigError, e.what());
    throw;
  }
  if (ctx.random_input) {
    ctx.source = finite_source(ctx.source->finite_graph()->with_weights(ctx.scheme));
  }
}

/// Whole graph for finite sources without a depth, else the depth truncation.
Truncation window(const Context& ctx, std::optional<int> depth, bool lump = false) {
  if (const auto* g = ctx.source->finite_graph(); g && !depth) return whole_graph(*g);
  if (!depth) throw Error(ErrorCode::ConfigError, "--depth is required for infinite generators");
  return truncate(*ctx.source, *depth, ctx.scheme, TruncateOptions{lump});
}

std::optional<int> single_depth(const RunConfig& cfg) {
  if (cfg.depth) return cfg.depth;
  if (cfg.depths.size() == 1) return cfg.depths.front();
  if (cfg.depths.size() > 1) throw Error(ErrorCode::ConfigError, "this command takes one depth");
  return std::nullopt;
}

fs::path out_dir(const RunConfig& cfg) {
  fs::path dir = cfg.out_dir;
  if (dir.empty()) {
    const char* env = std::getenv("RESIST_OUT");
    dir = env && *env ? fs::path(env) : fs::path(".");
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  file << content;
  if (!file) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

json config_json(const Context& ctx) {
  const auto& c = ctx.cfg;
  json j{{"command", c.command}, {"scheme", describe(ctx.scheme)}};
  if (!c.generator.empty()) j["generator"] = c.generator;
  if (!c.graph.empty()) j["graph"] = c.graph;
  if (c.depth) j["depth"] = *c.depth;
  if (!c.depths.empty()) j["depths"] = c.depths;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

void emit(Context& ctx, const fs::path& path, const json& doc) {
  write_file(path, doc.dump(2) + "\n");
  *ctx.out << doc.dump(2) << "\n";
}

// generate ----------------------------------------------------------------

int cmd_generate(Context& ctx) {
  const auto trunc = window(ctx, single_depth(ctx.cfg));
  auto doc = truncation_to_json(trunc);
  const auto dir = out_dir(ctx.cfg);
  write_file(dir / "graph.json", doc.dump(2) + "\n");
  *ctx.out << json{{"file", (dir / "graph.json").string()},
                   {"vertices", trunc.host.num_vertices()},
                   {"edges", trunc.host.num_edges()},
                   {"sites", trunc.sites.size()}}
                  .dump(2)
           << "\n";
  return 0;
}

// metric ------------------------------------------------------------------

int cmd_metric(Context& ctx) {
  const auto trunc = window(ctx, single_depth(ctx.cfg));
  const auto& g = trunc.host;
  const bool all = !ctx.cfg.volume && !ctx.cfg.diameter && ctx.cfg.from.empty();
  json doc{{"config", config_json(ctx)}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
  if (all || ctx.cfg.volume) doc["volume"] = volume(g);
  if (all || ctx.cfg.diameter) doc["diameter"] = diameter(g);
  if (!ctx.cfg.from.empty()) {
    const auto src = g.index_of_name(ctx.cfg.from);
    const auto d = distances_from(g, src);
    json dist = json::object();
    for (std::size_t v = 0; v < g.num_vertices(); ++v) dist[g.id(v).str()] = distance_to_json(d[v]);
    doc["from"] = ctx.cfg.from;
    doc["distances"] = dist;
  }
  emit(ctx, out_dir(ctx.cfg) / "metric.json", doc);
  return 0;
}

// cut ---------------------------------------------------------------------

CutWitness read_witness(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::ConfigError, "--witness is required");
  json doc;
  try {
    if (text.front() == '{') {
      doc = json::parse(text);
    } else {
      std::ifstream in(text);
      if (!in) throw Error(ErrorCode::IoError, "cannot open " + text);
      doc = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("witness is not JSON: ") + e.what());
  }
  return cut_from_json(doc);
}

int cmd_cut(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto depth = single_depth(cfg);
  if (!depth) throw Error(ErrorCode::ConfigError, "--depth is required for cut");
  if (cfg.x.empty() || cfg.y.empty()) throw Error(ErrorCode::ConfigError, "--x and --y are required");
  const auto witness = read_witness(cfg.witness);
  const auto x = BoundaryPoint::parse(cfg.x);
  const auto y = BoundaryPoint::parse(cfg.y);
  const auto verdict = verify_cut_witness(*ctx.source, witness, x, y, *depth);

  json doc{{"config", config_json(ctx)}, {"x", x.name}, {"y", y.name}, {"verdict", to_string(verdict.kind)}};
  json path = json::array();
  for (const auto& v : verdict.path) path.push_back(v.str());
  doc["path"] = path;

  bool ok = true;
  if (verdict.kind == CutVerdict::Kind::Separated) {
    const auto trunc = truncate(*ctx.source, *depth, ctx.scheme);
    const auto seed_vertex = trunc.host.index_of(ctx.source->ray_vertex(x, *depth));
    const auto flat = indicator_after_cut(trunc.host, witness.edges, seed_vertex);
    const bool flat_ok = is_flat(trunc.host, flat);
    doc["flat_function"] = flat_function_to_json(trunc.host, flat);
    doc["flat_function_energy"] = energy(trunc.host, flat.values);
    doc["flat"] = flat_ok;
    ok = flat_ok;
  }
  if (!cfg.expect.empty()) {
    const bool match = cfg.expect == to_string(verdict.kind);
    doc["expected"] = cfg.expect;
    ok = ok && match;
  }
  doc["pass"] = ok;
  emit(ctx, out_dir(cfg) / "cut.json", doc);
  return ok ? 0 : 1;
}

// dirichlet ---------------------------------------------------------------

std::string data_table(const RunConfig& cfg) {
  std::vector<std::string> parts;
  if (!cfg.data.empty()) parts.push_back(cfg.data);
  if (cfg.pendants) parts.push_back("vertex=" + format_double(*cfg.pendants));
  if (cfg.limit) parts.push_back("ray=" + format_double(*cfg.limit));
  if (parts.empty()) throw Error(ErrorCode::ConfigError, "boundary data is required: --data, --pendants or --limit");
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

SolverConfig solver_config(const RunConfig& cfg) {
  SolverConfig s;
  s.tolerance = cfg.tolerance;
  if (cfg.method == "cg") {
    s.method = SolverMethod::ConjugateGradient;
  } else if (cfg.method == "dense") {
    s.method = SolverMethod::Dense;
  } else if (cfg.method != "auto") {
    throw Error(ErrorCode::ConfigError, "solver method must be auto, cg or dense");
  }
  return s;
}

int cmd_dirichlet(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto table = data_table(cfg);
  const auto data = BoundaryData::parse(table);
  const auto solver = solver_config(cfg);
  const bool lump = ctx.figure_a && !cfg.no_lump;

  std::vector<int> depths = cfg.depths;
  if (cfg.depth) depths.insert(depths.begin(), *cfg.depth);
  std::vector<Truncation> truncs;
  std::vector<HarmonicSolution> sols;
  std::vector<double> sup_diff;
  if (depths.empty()) {
    truncs.push_back(window(ctx, std::nullopt));
    sols.push_back(solve_on(truncs.back(), data, solver));
  } else {
    auto tower = harmonic_extension_tower(*ctx.source, data, depths, ctx.scheme, solver, TruncateOptions{lump});
    truncs = std::move(tower.truncations);
    sols = std::move(tower.solutions);
    sup_diff = std::move(tower.sup_differences);
  }

  std::ostringstream csv;
  csv << "depth,vertexId,value\n";
  json rows = json::array();
  bool ok = true;
  std::optional<double> prev_root;
  int prev_depth = 0;
  const double slack = std::max(1e-12, 10 * cfg.tolerance);
  for (std::size_t k = 0; k < truncs.size(); ++k) {
    const auto& t = truncs[k];
    const auto& s = sols[k];
    for (std::size_t v = 0; v < t.host.num_vertices(); ++v) {
      csv << t.depth << ',' << t.host.id(v).str() << ',' << format_double(s.values(v)) << '\n';
    }
    const auto residual = harmonic_residual(t, s.values);
    const double lo = s.values.minCoeff();
    const double hi = s.values.maxCoeff();
    const double span = std::max(1.0, s.boundary_max - s.boundary_min);
    const bool max_principle = lo >= s.boundary_min - slack * span && hi <= s.boundary_max + slack * span;
    ok = ok && max_principle;
    json row{{"depth", t.depth},
             {"vertices", t.host.num_vertices()},
             {"method", to_string(s.method)},
             {"iterations", s.iterations},
             {"residual_norm", s.residual_norm},
             {"max_interior_residual", residual.max_abs()},
             {"boundary_min", s.boundary_min},
             {"boundary_max", s.boundary_max},
             {"maximum_principle", max_principle}};
    if (const auto root = t.host.find(ctx.source->root())) {
      const double value = s.values(*root);
      row["root_value"] = value;
      if (prev_root && *prev_root != 0.0 && value > 0.0 && *prev_root > 0.0) {
        row["ratio"] = std::pow(value / *prev_root, 1.0 / (t.depth - prev_depth));
      }
      prev_root = value;
      prev_depth = t.depth;
    }
    rows.push_back(row);
  }

  json doc{{"config", config_json(ctx)},
           {"boundary_data", table},
           {"lumped_pendants", lump},
           {"tolerances",
            {{"solver_tolerance", solver.tolerance},
             {"dense_threshold", solver.dense_threshold},
             {"max_iterations", solver.max_iterations},
             {"maximum_principle_slack", slack}}},
           {"rows", rows},
           {"sup_differences", sup_diff}};

  const bool figure_a_setup = ctx.figure_a && cfg.data.empty() && cfg.pendants == 0.0 && cfg.limit == 1.0 &&
                              !cfg.depths.empty() && !cfg.depth;
  if (figure_a_setup) {
    const double ratio_tol = 0.01;
    const auto report = reproduce_figure_a(cfg.depths, ratio_tol);
    json fa{{"monotone_decreasing", report.monotone_decreasing},
            {"ratio_limit", report.ratio_limit},
            {"ratio_tolerance", ratio_tol},
            {"ratio_within_tolerance", report.ratio_within_tolerance},
            {"published_limits", {report.published_limits.first, report.published_limits.second}},
            {"pass", report.pass}};
    if (report.ratio_error) fa["ratio_error"] = *report.ratio_error;
    json table_rows = json::array();
    for (const auto& r : report.rows) {
      json row{{"depth", r.depth}, {"root_value", r.root_value}};
      if (r.ratio) row["ratio"] = *r.ratio;
      table_rows.push_back(row);
    }
    fa["ratio_table"] = table_rows;
    doc["figure_a"] = fa;
    ok = ok && report.pass;
  }
  doc["pass"] = ok;

  const auto dir = out_dir(cfg);
  write_file(dir / "dirichlet_values.csv", csv.str());
  emit(ctx, dir / "dirichlet_summary.json", doc);
  return ok ? 0 : 1;
}

// evolve ------------------------------------------------------------------

EvolveOptions evolve_options(const RunConfig& cfg) {
  EvolveOptions o;
  if (cfg.method == "eigen") {
    o.method = EvolveMethod::Eigen;
  } else if (cfg.method == "cn" || cfg.method == "crank-nicolson") {
    o.method = EvolveMethod::CrankNicolson;
  } else if (cfg.method != "auto") {
    throw Error(ErrorCode::ConfigError, "evolve method must be auto, eigen or cn");
  }
  return o;
}

Eigen::VectorXd initial_density(const Context& ctx, const GeneratorMatrix& gen) {
  const auto& spec = ctx.cfg.p0;
  if (spec == "uniform") return uniform_density(gen);
  std::string name;
  if (spec == "root") {
    name = ctx.source->root().str();
  } else if (spec.rfind("point:", 0) == 0) {
    name = spec.substr(6);
  } else {
    throw Error(ErrorCode::ConfigError, "--p0 must be uniform, root or point:<id>");
  }
  const auto v = gen.host.index_of_name(name);
  if (!gen.state_of[v]) throw Error(ErrorCode::ConfigError, "initial point " + name + " is absorbed");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(gen.size()));
  p(static_cast<Eigen::Index>(*gen.state_of[v])) = 1.0 / gen.host.mu(v);
  return p;
}

json failures_json(const std::string& module, const std::vector<CheckFailure>& failures) {
  json out = json::array();
  for (const auto& f : failures) {
    out.push_back({{"module", module}, {"invariant", f.invariant}, {"sample", f.sample}, {"time", f.time},
                   {"value", f.value}});
  }
  return out;
}

json markov_json(const MarkovReport& r, const MarkovTolerances& tol) {
  json j{{"pass", r.pass()},
         {"min_density", r.min_density},
         {"max_l1_increase", r.max_l1_increase},
         {"max_linf_increase", r.max_linf_increase},
         {"max_composition_error", r.max_composition_error},
         {"abs_violations", r.abs_violations},
         {"contraction_samples", r.contraction_samples},
         {"contraction_violations", r.contraction_violations},
         {"tolerances",
          {{"positivity", tol.positivity},
           {"contraction", tol.contraction},
           {"mass", tol.mass},
           {"composition", tol.composition},
           {"form", tol.form}}},
         {"failures", failures_json("semigroup", r.failures)}};
  if (r.max_mass_drift) j["max_mass_drift"] = *r.max_mass_drift;
  return j;
}

json decay_json(const DecayReport& r, const DecayTolerances& tol) {
  return {{"pass", r.pass},
          {"max_identity_error", r.max_identity_error},
          {"min_bound_slack", r.min_bound_slack},
          {"tolerances", {{"identity", tol.identity}, {"bound", tol.bound}}}};
}

std::vector<std::size_t> region(const Context& ctx, const WeightedGraph& g) {
  std::vector<std::size_t> u;
  if (ctx.cfg.u.empty()) {
    u.push_back(g.index_of(ctx.source->root()));
    return u;
  }
  for (const auto& name : split(ctx.cfg.u, ',')) u.push_back(g.index_of_name(name));
  return u;
}

int cmd_evolve(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const auto trunc = window(ctx, single_depth(cfg));
  const auto bc = BoundaryCondition::parse(cfg.bc);
  const auto gen = assemble_generator(trunc, bc);
  const auto options = evolve_options(cfg);
  const auto times = cfg.times.empty() ? std::vector<double>{0.0, 0.1, 0.5, 1.0, 2.0} : cfg.times;
  const auto p0 = initial_density(ctx, gen);
  const auto u = region(ctx, gen.host);

  const auto path = evolve(gen, p0, times, options);
  std::ostringstream evo;
  evo << "time,vertexId,density\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t v = 0; v < gen.host.num_vertices(); ++v) {
      const double value = gen.state_of[v] ? path[k](static_cast<Eigen::Index>(*gen.state_of[v])) : 0.0;
      evo << format_double(times[k]) << ',' << gen.host.id(v).str() << ',' << format_double(value) << '\n';
    }
  }

  const DecayTolerances decay_tol;
  const auto decay = decay_bound_check(gen, p0, u, times, options, decay_tol);
  std::ostringstream mass;
  mass << "time,P_U,bound\n";
  for (const auto& s : decay.samples) {
    mass << format_double(s.time) << ',' << format_double(s.mass) << ',' << format_double(s.bound) << '\n';
  }

  MarkovSamples samples;
  samples.densities.push_back(p0);
  samples.functions.push_back(p0);
  if (cfg.seed) {
    std::mt19937_64 rng(*cfg.seed);
    samples.functions.push_back(random_function(gen.size(), rng));
  }
  const MarkovTolerances markov_tol;
  const auto markov = markov_checks(gen, samples, times, options, markov_tol);

  json doc{{"config", config_json(ctx)},
           {"boundary_condition", cfg.bc},
           {"method", cfg.method},
           {"max_step", options.max_step},
           {"cg_tolerance", options.cg_tolerance},
           {"eigen_cap", options.eigen_cap},
           {"states", gen.size()},
           {"p0", cfg.p0},
           {"times", times},
           {"markov", markov_json(markov, markov_tol)},
           {"decay", decay_json(decay, decay_tol)}};
  const bool ok = markov.pass() && decay.pass;
  doc["pass"] = ok;

  const auto dir = out_dir(cfg);
  write_file(dir / "evolution.csv", evo.str());
  write_file(dir / "mass_trace.csv", mass.str());
  emit(ctx, dir / "evolve_report.json", doc);
  return ok ? 0 : 1;
}

// check -------------------------------------------------------------------

struct SuiteResult {
  json body;
  bool pass = false;
};

SuiteResult suite(std::string module, std::string invariant, bool pass, json metrics, json failures = json::array()) {
  return {json{{"module", std::move(module)},
               {"invariant", std::move(invariant)},
               {"pass", pass},
               {"metrics", std::move(metrics)},
               {"failures", std::move(failures)}},
          pass};
}

json failure(const std::string& module, const std::string& invariant, std::size_t sample, double value) {
  return {{"module", module}, {"invariant", invariant}, {"sample", sample}, {"value", value}};
}

int cmd_check(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (!cfg.seed) throw Error(ErrorCode::ConfigError, "--seed is required for check");
  auto trunc = window(ctx, single_depth(cfg));
  if (trunc.sites.empty()) {
    trunc.sites.push_back({0, BoundaryPoint::at_vertex(trunc.host.id(0)), std::nullopt});
    index_sites(trunc);
  }
  const auto& g = trunc.host;
  const auto n = g.num_vertices();
  const std::uint64_t seed = *cfg.seed;
  auto rng_for = [seed](std::size_t task) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(task)};
    return std::mt19937_64(seq);
  };

  const double adjoint_tol = 1e-12;
  const double row_tol = 1e-12;
  const double continuity_tol = 1e-12;
  const double triangle_tol = 1e-12;
  const double solver_tol = 1e-9;
  const double max_principle_tol = 1e-9;
  const MarkovTolerances markov_tol;
  const DecayTolerances decay_tol;

  using Task = std::function<SuiteResult(std::mt19937_64&)>;
  std::vector<Task> tasks;

  tasks.push_back([&](std::mt19937_64& rng) {
    double worst = 0.0;
    json fails = json::array();
    for (std::size_t s = 0; s < 50; ++s) {
      const auto f = random_function(n, rng);
      const auto h = random_function(n, rng);
      const double b = bilinear_form(g, f, h);
      const double lhs = mu_inner(g, laplacian_apply(g, f), h);
      const double rhs = mu_inner(g, f, laplacian_apply(g, h));
      const double scale = std::max({1.0, std::abs(b)});
      const double err = std::max(std::abs(lhs - b), std::abs(rhs - b)) / scale;
      worst = std::max(worst, err);
      if (err > adjoint_tol) fails.push_back(failure("forms", "laplacian_adjointness", s, err));
    }
    return suite("forms", "laplacian_adjointness", fails.empty(), {{"max_relative_error", worst}, {"tolerance", adjoint_tol}},
                 fails);
  });

  tasks.push_back([&](std::mt19937_64&) {
    const double worst = max_row_sum(assemble_qmatrix<double>(g));
    json fails = json::array();
    if (worst > row_tol) fails.push_back(failure("forms", "q_matrix_row_sums", 0, worst));
    return suite("forms", "q_matrix_row_sums", fails.empty(), {{"max_row_sum", worst}, {"tolerance", row_tol}}, fails);
  });

  tasks.push_back([&](std::mt19937_64& rng) {
    std::size_t violations = 0;
    double slack = -std::numeric_limits<double>::infinity();
    json fails = json::array();
    for (std::size_t s = 0; s < 20; ++s) {
      const auto f = random_function(n, rng);
      const auto pairs = random_pairs(n, 100, rng);
      const auto r = continuity_modulus_check(g, f, pairs, continuity_tol);
      violations += r.violations;
      slack = std::max(slack, r.max_slack);
      if (r.violations) fails.push_back(failure("forms", "continuity_modulus", s, r.max_slack));
    }
    return suite("forms", "continuity_modulus", violations == 0,
                 {{"violations", violations}, {"max_slack", slack}, {"tolerance", continuity_tol}}, fails);
  });

  tasks.push_back([&](std::mt19937_64& rng) {
    double worst = 0.0;
    json fails = json::array();
    for (std::size_t s = 0; s < 5; ++s) {
      const auto src = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const auto d = distances_from(g, src);
      for (const auto& [a, b] : random_pairs(n, 100, rng)) {
        const auto da = distances_from(g, a);
        if (!d[a] || !d[b] || !da[b]) continue;
        const double excess = *d[b] - (*d[a] + *da[b]);
        const double sym = std::abs(*da[src] - *d[a]);
        const double err = std::max(excess, sym) / std::max(1.0, *d[b]);
        worst = std::max(worst, err);
        if (err > triangle_tol) fails.push_back(failure("metric", "triangle_inequality", s, err));
      }
    }
    return suite("metric", "triangle_inequality", fails.empty(), {{"max_excess", worst}, {"tolerance", triangle_tol}},
                 fails);
  });

  auto random_data = [&](std::mt19937_64& rng) {
    std::map<std::string, double> table;
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    for (const auto& s : trunc.sites) table[s.point.name] = value(rng);
    return BoundaryData([table](const BoundaryPoint& p) -> std::optional<double> {
      const auto it = table.find(p.name);
      if (it == table.end()) return std::nullopt;
      return it->second;
    });
  };

  tasks.push_back([&](std::mt19937_64& rng) {
    double worst_excess = 0.0;
    double worst_residual = 0.0;
    json fails = json::array();
    for (std::size_t s = 0; s < 5; ++s) {
      const auto sol = solve_on(trunc, random_data(rng));
      const double excess = std::max(sol.values.maxCoeff() - sol.boundary_max, sol.boundary_min - sol.values.minCoeff());
      const double residual = harmonic_residual(trunc, sol.values).max_abs();
      worst_excess = std::max(worst_excess, excess);
      worst_residual = std::max(worst_residual, residual);
      if (excess > max_principle_tol) fails.push_back(failure("dirichlet", "maximum_principle", s, excess));
    }
    return suite("dirichlet", "maximum_principle", fails.empty(),
                 {{"max_excess", worst_excess}, {"max_interior_residual", worst_residual}, {"tolerance", max_principle_tol}},
                 fails);
  });

  tasks.push_back([&](std::mt19937_64& rng) {
    double worst = 0.0;
    json fails = json::array();
    for (std::size_t s = 0; s < 3; ++s) {
      const auto data = random_data(rng);
      SolverConfig cg;
      cg.method = SolverMethod::ConjugateGradient;
      cg.tolerance = 1e-13;
      SolverConfig dense;
      dense.method = SolverMethod::Dense;
      const double diff = (solve_on(trunc, data, cg).values - solve_on(trunc, data, dense).values).cwiseAbs().maxCoeff();
      worst = std::max(worst, diff);
      if (diff > solver_tol) fails.push_back(failure("dirichlet", "solver_agreement", s, diff));
    }
    return suite("dirichlet", "solver_agreement", fails.empty(), {{"max_difference", worst}, {"tolerance", solver_tol}},
                 fails);
  });

  tasks.push_back([&](std::mt19937_64&) {
    const auto b = lambda_min_dirichlet(trunc);
    json fails = json::array();
    if (!b.pass) fails.push_back(failure("dirichlet", "spectral_lower_bound", 0, b.eigenvalue - b.lower_bound));
    return suite("dirichlet", "spectral_lower_bound", b.pass,
                 {{"lambda_min", b.eigenvalue}, {"lower_bound", b.lower_bound}}, fails);
  });

  const std::vector<double> times{0.0, 0.1, 0.5, 1.0, 2.0};
  tasks.push_back([&](std::mt19937_64& rng) {
    std::map<std::string, BoundaryKind> kinds;
    std::bernoulli_distribution coin(0.5);
    for (const auto& s : trunc.sites) kinds[s.point.name] = coin(rng) ? BoundaryKind::Absorbing : BoundaryKind::Reflecting;
    const BoundaryCondition mixed([kinds](const BoundaryPoint& p) -> std::optional<BoundaryKind> {
      const auto it = kinds.find(p.name);
      if (it == kinds.end()) return std::nullopt;
      return it->second;
    });
    json metrics = json::object();
    json fails = json::array();
    bool ok = true;
    const std::vector<std::pair<std::string, BoundaryCondition>> cases{
        {"absorbing", BoundaryCondition::uniform(BoundaryKind::Absorbing)},
        {"reflecting", BoundaryCondition::uniform(BoundaryKind::Reflecting)},
        {"mixed", mixed}};
    for (const auto& [label, bc] : cases) {
      const auto gen = assemble_generator(trunc, bc);
      MarkovSamples samples;
      samples.densities.push_back(uniform_density(gen));
      for (int k = 0; k < 2; ++k) samples.densities.push_back(random_function(gen.size(), rng, 0.0, 1.0));
      for (int k = 0; k < 5; ++k) samples.functions.push_back(random_function(gen.size(), rng));
      const auto r = markov_checks(gen, samples, times, {}, markov_tol);
      metrics[label] = markov_json(r, markov_tol);
      for (const auto& f : failures_json("semigroup", r.failures)) fails.push_back(f);
      ok = ok && r.pass();
    }
    return suite("semigroup", "markov_properties", ok, metrics, fails);
  });

  tasks.push_back([&](std::mt19937_64&) {
    const auto gen = assemble_generator(trunc, BoundaryCondition::uniform(BoundaryKind::Absorbing));
    std::vector<std::size_t> u;
    const auto d = distances_from(g, g.index_of(ctx.source->root()));
    std::vector<double> finite;
    for (const auto& x : d) if (x) finite.push_back(*x);
    std::sort(finite.begin(), finite.end());
    const double radius = finite.empty() ? 0.0 : finite[finite.size() / 2];
    for (std::size_t v = 0; v < n; ++v) if (d[v] && *d[v] <= radius) u.push_back(v);
    const auto r = decay_bound_check(gen, uniform_density(gen), u, times, {}, decay_tol);
    json fails = json::array();
    if (!r.pass) fails.push_back(failure("semigroup", "mass_decay_bound", 0, r.min_bound_slack));
    json metrics = decay_json(r, decay_tol);
    metrics["region_size"] = u.size();
    return suite("semigroup", "mass_decay_bound", r.pass, metrics, fails);
  });

  const auto results = parallel_map(tasks.size(), cfg.jobs, [&](std::size_t k) {
    auto rng = rng_for(k);
    return tasks[k](rng);
  });
  json suites = json::array();
  bool ok = true;
  for (const auto& r : results) {
    suites.push_back(r.body);
    ok = ok && r.pass;
  }
  json doc{{"config", config_json(ctx)},
           {"vertices", n},
           {"edges", g.num_edges()},
           {"boundary_sites", trunc.sites.size()},
           {"suites", suites},
           {"pass", ok}};
  emit(ctx, out_dir(cfg) / "check_report.json", doc);
  return ok ? 0 : 1;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::CheckFailed:
    case ErrorCode::BoundViolated:
    case ErrorCode::DominanceViolated:
      return 1;
    default:
      return 2;
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& depths) {
  sub->add_option("--generator", cfg.generator, "generator spec, e.g. figure-a or geometric-tree:2,0.5");
  sub->add_option("--graph", cfg.graph, "graph JSON file or generator spec");
  sub->add_option("--depth", cfg.depth, "truncation depth");
  sub->add_option("--depths", depths, "depth list or range, e.g. 5..30");
  sub->add_option("--scheme", cfg.scheme, "vertex weights: mu0, deg or const:<c>");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--out", cfg.out_dir, "output directory (default $RESIST_OUT or .)");
  sub->add_option("--jobs", cfg.jobs, "worker threads");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string depths;
  std::string times;

  CLI::App app("Resistance networks on finite truncations", "resist");
  app.require_subcommand(1);
  auto* generate = app.add_subcommand("generate", "write a truncation as graph JSON");
  auto* metric = app.add_subcommand("metric", "distances, diameter and volume");
  auto* cut = app.add_subcommand("cut", "verify a cut witness and emit the flat function");
  auto* dirichlet = app.add_subcommand("dirichlet", "harmonic extension on one or more truncations");
  auto* evolve_cmd = app.add_subcommand("evolve", "semigroup evolution with checks");
  auto* check = app.add_subcommand("check", "full property suite");
  for (auto* sub : {generate, metric, cut, dirichlet, evolve_cmd, check}) add_common(sub, cfg, depths);

  metric->add_option("--from", cfg.from, "source vertex for distances");
  metric->add_flag("--volume", cfg.volume, "report the volume");
  metric->add_flag("--diameter", cfg.diameter, "report the diameter");

  cut->add_option("--witness", cfg.witness, "cut JSON file or inline JSON");
  cut->add_option("--x", cfg.x, "first boundary point");
  cut->add_option("--y", cfg.y, "second boundary point");
  cut->add_option("--expect", cfg.expect, "expected verdict")->check(CLI::IsMember({"Separated", "NotSeparated", "UnknownAtDepth"}));

  dirichlet->add_option("--data", cfg.data, "boundary data table key=value,...");
  dirichlet->add_option("--pendants", cfg.pendants, "datum on boundary vertices");
  dirichlet->add_option("--limit", cfg.limit, "datum on ray ends");
  dirichlet->add_option("--method", cfg.method, "auto, cg or dense");
  dirichlet->add_option("--tolerance", cfg.tolerance, "solver tolerance");
  dirichlet->add_flag("--no-lump", cfg.no_lump, "keep every pendant vertex");

  evolve_cmd->add_option("--bc", cfg.bc, "boundary condition table key=absorbing|reflecting,...");
  evolve_cmd->add_option("--times", times, "time list or a..b:step");
  evolve_cmd->add_option("--method", cfg.method, "auto, eigen or cn");
  evolve_cmd->add_option("--u", cfg.u, "vertex ids of the region U");
  evolve_cmd->add_option("--p0", cfg.p0, "uniform, root or point:<id>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context ctx;
  ctx.out = &out;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!depths.empty()) cfg.depths = expand_depths(depths);
    if (!times.empty()) cfg.times = parse_times(times);
    ctx.scheme = parse_weight_scheme(cfg.scheme);
    ctx.cfg = cfg;
    resolve_input(ctx);
    if (cfg.command == "generate") return cmd_generate(ctx);
    if (cfg.command == "metric") return cmd_metric(ctx);
    if (cfg.command == "cut") return cmd_cut(ctx);
    if (cfg.command == "dirichlet") return cmd_dirichlet(ctx);
    if (cfg.command == "evolve") return cmd_evolve(ctx);
    return cmd_check(ctx);
  } catch (const Error& e) {
    err << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace resist::cli
