// qslmct command-line front end: bounds tables, MCT sweeps, single-T
// optimization, algebra reports, the classical-limit table and a quick
// self-check suite. Exit codes: 0 ok, 1 property failure, 2 usage,
// 3 numeric invariant violation.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qslmct/grape_mct.hpp"
#include "qslmct/lie_toolkit.hpp"
#include "qslmct/metrics.hpp"
#include "qslmct/models.hpp"
#include "qslmct/qsl_bounds.hpp"
#include "qslmct/random.hpp"
#include "qslmct/short_time.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qsl;

namespace {

constexpr const char* kVersion = "qslmct 1.0.0";

struct GridSpec {
  double start = 0.0, stop = 0.0, step = 0.0;
};

// "start:stop:step" or a single value; empty or inverted grids are usage errors.
GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    g.start = g.stop = std::stod(text);
    g.step = 1.0;
    return g;
  }
  const auto c2 = text.find(':', c1 + 1);
  g.start = std::stod(text.substr(0, c1));
  if (c2 == std::string::npos) {
    g.stop = std::stod(text.substr(c1 + 1));
    g.step = 0.5;
  } else {
    g.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    g.step = std::stod(text.substr(c2 + 1));
  }
  if (g.step <= 0.0 || g.stop < g.start - 1e-15)
    throw CLI::ValidationError("grid", "empty or inverted grid: " + text);
  return g;
}

std::vector<double> grid_values(const GridSpec& g) {
  std::vector<double> v;
  for (double x = g.start; x <= g.stop + 1e-12; x += g.step) v.push_back(x);
  if (v.empty()) throw CLI::ValidationError("grid", "empty grid");
  return v;
}

PhaseControlModel make_model(const std::string& name, double j) {
  if (name == "su2") return PhaseControlModel::make_su2();
  if (name == "su3") return PhaseControlModel::make_su3();
  if (name == "spin") return PhaseControlModel::make_spin(j);
  throw CLI::ValidationError("--model", "unknown model: " + name);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_manifest(const fs::path& out_dir, const std::string& stem, json config) {
  config["version"] = kVersion;
  write_text(out_dir / (stem + ".manifest.json"), config.dump(2) + "\n");
}

// Short-time MCT bound for a target label, when one is derived; the su3
// constants come from the generated algebra so they are computed, not quoted.
std::optional<double> short_time_bound(const PhaseControlModel& model,
                                       const std::string& family, double phi,
                                       const AlgebraReport* su3_report) {
  if (model.label == ModelLabel::su2) {
    auto [tx, tz] = su2_mct_bounds(phi);
    if (family == "x" || family == "y") return tx;
    if (family == "z") return tz;
    return std::nullopt;
  }
  if (model.label == ModelLabel::su3 && su3_report) {
    auto b = su3_mct_bounds(phi, *su3_report);
    if (family == "A" || family == "B") return b.t_a;
    if (family == "C") return b.t_c;
    if (family == "D") return b.t_d;
    return std::nullopt;
  }
  return std::nullopt;
}

AlgebraReport model_algebra(const PhaseControlModel& model) {
  return generate_algebra({HermitianGenerator(model.gen_a),
                           HermitianGenerator(model.gen_b)});
}

json algebra_to_json(const AlgebraReport& report) {
  json j;
  j["dimension"] = report.dimension;
  j["fully_controllable"] = report.fully_controllable;
  j["elements"] = json::array();
  for (const auto& e : report.basis) {
    json el;
    el["depth"] = e.depth;
    el["provenance"] = e.expression;
    json m = json::array();
    for (Eigen::Index r = 0; r < e.element.rows(); ++r)
      for (Eigen::Index c = 0; c < e.element.cols(); ++c)
        m.push_back({e.element(r, c).real(), e.element(r, c).imag()});
    el["matrix"] = m;
    j["elements"].push_back(el);
  }
  j["structure_constants"] = json::array();
  for (const auto& [key, f] : report.structure_constants) {
    const auto& [a, b, c] = key;
    j["structure_constants"].push_back({{"a", a}, {"b", b}, {"c", c}, {"f", f}});
  }
  return j;
}

int cmd_bounds(const std::string& model_name, double spin_j,
               const std::string& targets_csv, const std::string& phi_spec,
               const fs::path& out_dir) {
  PhaseControlModel model = make_model(model_name, spin_j);
  const auto phis = grid_values(parse_grid(phi_spec));

  std::optional<AlgebraReport> report;
  if (model.label == ModelLabel::su3) report = model_algebra(model);

  std::vector<std::string> targets;
  for (std::size_t p = 0; p < targets_csv.size();) {
    auto q = targets_csv.find(',', p);
    if (q == std::string::npos) q = targets_csv.size();
    if (q > p) targets.push_back(targets_csv.substr(p, q - p));
    p = q + 1;
  }
  if (targets.empty()) throw CLI::ValidationError("--targets", "no targets given");

  for (const auto& t : targets) {
    std::string csv = "phi,s1,s2,tau1,tau2,tau_unified,t_short\n";
    for (double phi : phis) {
      UnitaryOperator v = target(model, TargetSpec{t, phi});
      QslReport q = qsl_times(v, model.delta_eps_bar(), model.hnorm_bar());
      auto ts = short_time_bound(model, t, phi, report ? &*report : nullptr);
      csv += fmt(phi) + "," + fmt(q.s1) + "," + fmt(q.s2) + "," + fmt(q.tau1) + "," +
             fmt(q.tau2) + "," + fmt(q.tau_unified) + "," + (ts ? fmt(*ts) : "") + "\n";
    }
    write_text(out_dir / ("bounds_" + model_name + "_" + t + ".csv"), csv);
  }

  // Companion table of the short-time bounds alone.
  if (model.label == ModelLabel::su2 || model.label == ModelLabel::su3) {
    std::string csv = model.label == ModelLabel::su2 ? "phi,T_x,T_z\n"
                                                     : "phi,T_A,T_C,T_D\n";
    for (double phi : phis) {
      if (model.label == ModelLabel::su2) {
        auto [tx, tz] = su2_mct_bounds(phi);
        csv += fmt(phi) + "," + fmt(tx) + "," + fmt(tz) + "\n";
      } else {
        auto b = su3_mct_bounds(phi, *report);
        csv += fmt(phi) + "," + fmt(b.t_a) + "," + fmt(b.t_c) + "," + fmt(b.t_d) + "\n";
      }
    }
    write_text(out_dir / ("short_time_bounds_" + model_name + ".csv"), csv);
  }

  write_manifest(out_dir, "bounds_" + model_name,
                 {{"command", "bounds"},
                  {"model", model_name},
                  {"targets", targets_csv},
                  {"phi", phi_spec}});
  return 0;
}

int cmd_sweep(const std::string& model_name, double spin_j, const std::string& tgt,
              double phi, double thi, const SweepOptions& opts,
              const std::string& overlay_path, const fs::path& out_dir) {
  PhaseControlModel model = make_model(model_name, spin_j);
  UnitaryOperator v = target(model, TargetSpec{tgt, phi});

  std::optional<AlgebraReport> report;
  if (model.label == ModelLabel::su3) report = model_algebra(model);

  double t_hi = thi;
  if (t_hi <= 0.0) {
    const double tau =
        qsl_times(v, model.delta_eps_bar(), model.hnorm_bar()).tau_unified;
    t_hi = std::max(3.0 * tau, 2.0);
  }

  SweepResult res = mct_sweep(model, v, t_hi, opts);
  QslReport q = qsl_times(v, model.delta_eps_bar(), model.hnorm_bar());
  auto ts = short_time_bound(model, tgt, phi, report ? &*report : nullptr);

  json j;
  j["model"] = model_name;
  j["target"] = tgt;
  j["phi"] = phi;
  j["threshold"] = res.threshold;
  j["grid"] = json::array();
  for (const auto& [T, bj] : res.grid) j["grid"].push_back({{"T", T}, {"best_J", bj}});
  j["t_min"] = res.t_min ? json(*res.t_min) : json(nullptr);
  if (!res.t_min) j["warning"] = "no grid point reached the threshold";
  j["t_min_by_threshold"] = {
      {"1e-4", res.t_min_loose ? json(*res.t_min_loose) : json(nullptr)},
      {"1e-5", res.t_min_mid ? json(*res.t_min_mid) : json(nullptr)},
      {"1e-6", res.t_min_tight ? json(*res.t_min_tight) : json(nullptr)}};
  j["bounds"] = {{"tau1", q.tau1},
                 {"tau2", q.tau2},
                 {"short_time", ts ? json(*ts) : json(nullptr)}};
  if (!overlay_path.empty()) {
    std::ifstream in(overlay_path);
    if (!in) throw CLI::ValidationError("--overlay", "cannot read " + overlay_path);
    json ov = json::array();
    double a, b;
    while (in >> a >> b) ov.push_back({a, b});
    j["overlay"] = ov;
  }

  const std::string stem = "sweep_" + model_name + "_" + tgt + "_phi" + fmt(phi);
  write_text(out_dir / (stem + ".json"), j.dump(2) + "\n");

  std::string csv = "T,best_J\n";
  for (const auto& [T, bj] : res.grid) csv += fmt(T) + "," + fmt(bj) + "\n";
  write_text(out_dir / (stem + ".csv"), csv);

  write_manifest(out_dir, stem,
                 {{"command", "sweep"},
                  {"model", model_name},
                  {"target", tgt},
                  {"phi", phi},
                  {"t_hi", t_hi},
                  {"t_step", opts.t_step},
                  {"nts", opts.n_steps},
                  {"seeds", opts.n_seeds},
                  {"threshold", opts.threshold},
                  {"seed", opts.seed}});
  std::cout << stem << ": t_min="
            << (res.t_min ? fmt(*res.t_min) : std::string("none")) << "\n";
  return 0;
}

int cmd_mct(const std::string& model_name, double spin_j, const std::string& tgt,
            double phi, double total_time, int nts, unsigned long long seed,
            const fs::path& out_dir) {
  PhaseControlModel model = make_model(model_name, spin_j);
  UnitaryOperator v = target(model, TargetSpec{tgt, phi});
  OptimizeOptions oo;
  oo.accelerated = true;
  OptimizationResult res = optimize(model, v, total_time, nts, seed, oo);

  json j;
  j["final_infidelity"] = res.final_infidelity;
  j["iterations"] = res.iterations;
  j["converged"] = res.converged;
  j["field"] = {{"n_steps", res.field.n_steps},
                {"total_time", res.field.total_time},
                {"values", res.field.values}};
  const std::string stem = "mct_" + model_name + "_" + tgt + "_phi" + fmt(phi);
  write_text(out_dir / (stem + ".json"), j.dump(2) + "\n");
  write_manifest(out_dir, stem,
                 {{"command", "mct"},
                  {"model", model_name},
                  {"target", tgt},
                  {"phi", phi},
                  {"time", total_time},
                  {"nts", nts},
                  {"seed", seed}});
  std::cout << stem << ": J=" << fmt(res.final_infidelity) << "\n";
  return 0;
}

int cmd_lie(const std::string& model_name, double spin_j, const fs::path& out_dir) {
  PhaseControlModel model = make_model(model_name, spin_j);
  AlgebraReport report = model_algebra(model);
  write_text(out_dir / ("lie_" + model_name + ".json"),
             algebra_to_json(report).dump(2) + "\n");
  write_manifest(out_dir, "lie_" + model_name,
                 {{"command", "lie"}, {"model", model_name}});
  std::cout << "dimension=" << report.dimension
            << " fully_controllable=" << (report.fully_controllable ? "true" : "false")
            << "\n";
  return 0;
}

int cmd_classical(const std::string& j_spec, const fs::path& out_dir) {
  GridSpec g = parse_grid(j_spec);
  std::vector<double> js = grid_values(g);
  auto table = classical_limit_table(js);
  std::string csv = "j,phi_perp,tau2\n";
  for (const auto& [jv, tau] : table)
    csv += fmt(jv) + "," + fmt(spinj_phi_perp(jv)) + "," + fmt(tau) + "\n";
  write_text(out_dir / "classical.csv", csv);
  write_manifest(out_dir, "classical", {{"command", "classical"}, {"j", j_spec}});
  return 0;
}

int cmd_verify(unsigned long long seed) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };
  Rng rng(seed);

  {  // SU(2): the two unitary metrics coincide
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
      auto u = haar_random_unitary(2, rng);
      auto v = haar_random_unitary(2, rng);
      ok = std::abs(s1_distance(u, v) - s2_distance(u, v)) < 1e-10;
    }
    check("su2 metric equivalence", ok);
  }
  {  // S1 against the state-maximization oracle
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      auto u = haar_random_unitary(3, rng);
      auto v = haar_random_unitary(3, rng);
      ok = std::abs(s1_distance(u, v) - s1_bruteforce_oracle(u, v, 4000, rng)) < 1e-3;
    }
    check("s1 oracle agreement", ok);
  }
  {  // full controllability of both models
    auto r2 = model_algebra(PhaseControlModel::make_su2());
    auto r3 = model_algebra(PhaseControlModel::make_su3());
    check("algebra dimensions", r2.dimension == 3 && r2.fully_controllable &&
                                    r3.dimension == 8 && r3.fully_controllable);
  }
  {  // analytic SU(2) bound chain
    auto [tx, tz] = su2_mct_bounds(0.3);
    check("su2 bound chain",
          std::abs(tx - 0.3) < 1e-12 && std::abs(tz - std::sqrt(12 * 0.3)) < 1e-12);
  }
  {  // exact GRAPE gradients vs finite differences
    auto model = PhaseControlModel::make_su3();
    auto v = target(model, TargetSpec{"C", 0.3});
    bool ok = true;
    for (int rep = 0; rep < 5 && ok; ++rep) {
      ControlField f{12, 1.3, {}};
      f.values.resize(12);
      for (auto& a : f.values) a = uniform(rng, -M_PI, M_PI);
      auto g = gradient(model, f, v.matrix());
      for (int k = 0; k < 12 && ok; ++k) {
        auto fp = f, fm = f;
        fp.values[k] += 1e-6;
        fm.values[k] -= 1e-6;
        const double fd =
            (infidelity(propagate(model, fp), v) - infidelity(propagate(model, fm), v)) /
            2e-6;
        ok = std::abs(fd - g[k]) <= 1e-5 * std::max(1.0, std::abs(fd));
      }
    }
    check("gradient finite-difference agreement", ok);
  }
  {  // classical limit decreases
    bool ok = true;
    try {
      auto table = classical_limit_table({0.5, 1, 2, 5, 10, 25, 50});
      ok = table.back().second / table.front().second < 0.1;
    } catch (const std::exception&) {
      ok = false;
    }
    check("classical limit decrease", ok);
  }
  std::cout << (failures == 0 ? "verify: all checks passed"
                              : "verify: " + std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-speed-limit and minimum-control-time toolkit"};
  app.require_subcommand(1);

  std::string model_name = "su2", targets = "x", tgt = "x", phi_spec = "0.1:3.1:0.1";
  std::string out_dir = ".", format = "csv", overlay, j_spec = "0.5:50";
  double spin_j = 0.5, phi = M_PI / 2, thi = 0.0, total_time = 1.0;
  unsigned long long seed = 0;
  SweepOptions sweep_opts;
  sweep_opts.optimize.accelerated = true;
  sweep_opts.optimize.target_infidelity = 1e-7;
  sweep_opts.optimize.max_iters = 4000;
  sweep_opts.optimize.stall_window = 100;
  int nts = 30;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--model", model_name, "su2 | su3 | spin");
    c->add_option("--j", spin_j, "spin J (spin model only)");
    c->add_option("--out", out_dir, "output directory");
    c->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    c->add_option("--seed", seed, "base RNG seed");
  };

  auto* b = app.add_subcommand("bounds", "QSL and short-time bound tables");
  add_common(b);
  b->add_option("--targets", targets, "comma-separated target labels");
  b->add_option("--phi", phi_spec, "phi grid start:stop:step");

  auto* s = app.add_subcommand("sweep", "continuation MCT sweep");
  add_common(s);
  s->add_option("--target", tgt, "target label");
  s->add_option("--phi", phi, "target angle");
  s->add_option("--thi", thi, "starting T (default max(3 tau, 2))");
  s->add_option("--tstep", sweep_opts.t_step, "T grid step");
  s->add_option("--nts", sweep_opts.n_steps, "time steps per field");
  s->add_option("--seeds", sweep_opts.n_seeds, "independent random seeds");
  s->add_option("--threshold", sweep_opts.threshold, "infidelity threshold");
  s->add_option("--overlay", overlay, "external (phi, T) reference curve file");

  auto* m = app.add_subcommand("mct", "single-T GRAPE optimization");
  add_common(m);
  m->add_option("--target", tgt, "target label");
  m->add_option("--phi", phi, "target angle");
  m->add_option("--time", total_time, "total evolution time");
  m->add_option("--nts", nts, "time steps");

  auto* l = app.add_subcommand("lie", "dynamical Lie algebra report");
  add_common(l);

  auto* c = app.add_subcommand("classical", "spin-J classical-limit table");
  c->add_option("--j", j_spec, "J grid start:stop[:step]");
  c->add_option("--out", out_dir, "output directory");

  auto* v = app.add_subcommand("verify", "run the invariant self-checks");
  v->add_option("--seed", seed, "base RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    fs::create_directories(out_dir);
    if (b->parsed()) return cmd_bounds(model_name, spin_j, targets, phi_spec, out_dir);
    if (s->parsed()) {
      sweep_opts.seed = seed;
      return cmd_sweep(model_name, spin_j, tgt, phi, thi, sweep_opts, overlay, out_dir);
    }
    if (m->parsed())
      return cmd_mct(model_name, spin_j, tgt, phi, total_time, nts, seed, out_dir);
    if (l->parsed()) return cmd_lie(model_name, spin_j, out_dir);
    if (c->parsed()) return cmd_classical(j_spec, out_dir);
    if (v->parsed()) return cmd_verify(seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
