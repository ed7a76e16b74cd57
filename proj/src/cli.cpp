#include "thetamix/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetamix/format.hpp"
#include "thetamix/manifest.hpp"
#include "thetamix/mixing.hpp"
#include "thetamix/nbody.hpp"
#include "thetamix/potential.hpp"

namespace thetamix::cli {

std::vector<double> theta_grid(double theta_min, double theta_max, int n) {
  if (n < 2) throw UsageError("sweep needs n >= 2, got " + std::to_string(n));
  if (!(theta_min < theta_max)) {
    throw UsageError("sweep needs theta_min < theta_max, got [" + format_g(theta_min) + ", " +
                     format_g(theta_max) + "]");
  }
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double span = theta_max - theta_min;
  for (int i = 0; i < n; ++i) grid[i] = theta_min + span * (static_cast<double>(i) / (n - 1));
  grid.back() = theta_max;
  return grid;
}

SweepTarget parse_sweep_target(const std::string& name) {
  if (name == "sigma") return SweepTarget::sigma;
  if (name == "surface_field") return SweepTarget::surface_field;
  if (name == "dipole") return SweepTarget::dipole;
  throw UsageError("unknown sweep target '" + name + "' (sigma, surface_field, dipole)");
}

std::string sweep_unit(SweepTarget target) {
  switch (target) {
    case SweepTarget::sigma: return "statC/g";
    case SweepTarget::surface_field: return "statV/cm";
    case SweepTarget::dipole: return "G*cm^3";
  }
  return {};
}

std::vector<SweepRow> cmd_sweep(double theta_min, double theta_max, int n, SweepTarget target,
                                const CelestialBody& body, const DerivedConstants& dc,
                                const PhysicalConstants& pc) {
  std::vector<SweepRow> rows;
  for (double theta : theta_grid(theta_min, theta_max, n)) {
    const Quantity sigma = derive_sigma(dc, pc, theta);
    double value = 0.0;
    switch (target) {
      case SweepTarget::sigma: value = sigma.value(); break;
      case SweepTarget::surface_field: value = surface_field(body, sigma).value(); break;
      case SweepTarget::dipole: value = magnetic_dipole(body, sigma, pc).value(); break;
    }
    rows.push_back({theta, value});
  }
  return rows;
}

namespace {

// ---------------------------------------------------------------------------
// Output

struct Row {
  std::string name;
  Quantity value;
  std::string unit;
  std::string si_kind;  // empty: look the conversion up by dimension
};

struct Section {
  std::string title;
  std::vector<Row> rows;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Section& section(std::string title) {
    sections_.push_back({std::move(title), {}});
    return sections_.back();
  }

  void print(std::ostream& out, bool json, bool si) const {
    if (json) {
      print_json(out, si);
    } else {
      print_table(out, si);
    }
  }

 private:
  static std::optional<SiValue> si_of(const Row& r) {
    try {
      return r.si_kind.empty() ? to_si(r.value) : to_si(r.value, r.si_kind);
    } catch (const DimensionError&) {
      return std::nullopt;
    }
  }

  void print_json(std::ostream& out, bool si) const {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    for (const auto& s : sections_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (const auto& r : s.rows) {
        nlohmann::ordered_json entry;
        entry["value"] = r.value.value();
        entry["unit"] = r.unit;
        if (si) {
          if (auto v = si_of(r)) {
            entry["si_value"] = v->value;
            entry["si_unit"] = v->unit;
          }
        }
        obj[r.name] = std::move(entry);
      }
      doc[s.title] = std::move(obj);
    }
    out << doc.dump(2) << '\n';
  }

  void print_table(std::ostream& out, bool si) const {
    std::size_t name_w = 4, value_w = 5, unit_w = 4;
    for (const auto& s : sections_) {
      for (const auto& r : s.rows) {
        name_w = std::max(name_w, r.name.size());
        value_w = std::max(value_w, format_g(r.value.value(), 10).size());
        unit_w = std::max(unit_w, r.unit.size());
      }
    }
    auto pad = [](std::string s, std::size_t w) {
      if (s.size() < w) s.append(w - s.size(), ' ');
      return s;
    };
    bool first = true;
    for (const auto& s : sections_) {
      if (!first) out << '\n';
      first = false;
      out << "[" << s.title << "]\n";
      for (const auto& r : s.rows) {
        std::string line = pad(r.name, name_w) + "  " + pad(format_g(r.value.value(), 10), value_w) +
                           "  " + pad(r.unit, unit_w);
        if (si) {
          if (auto v = si_of(r)) line += "  " + format_g(v->value, 10) + " " + v->unit;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
      }
    }
  }

  std::string command_;
  std::vector<Section> sections_;
};

Row row(std::string name, const Quantity& q, std::string unit, std::string si_kind = {}) {
  return {std::move(name), q, std::move(unit), std::move(si_kind)};
}
Row scalar(std::string name, double x) { return {std::move(name), Quantity::dimensionless(x), "1", {}}; }

// ---------------------------------------------------------------------------
// Shared context

struct Context {
  PhysicalConstants pc;
  DerivedConstants dc;
  std::string fingerprint;
  std::string constants_source;
};

Context load_context(const std::string& constants_flag) {
  Context ctx;
  std::string path = constants_flag;
  if (path.empty()) {
    if (const char* env = std::getenv("THETAMIX_CONSTANTS"); env != nullptr && *env != '\0') path = env;
  }
  ctx.pc = path.empty() ? PhysicalConstants::codata2018() : load_constants_file(path);
  ctx.constants_source = path.empty() ? "pinned CODATA 2018" : path;
  ctx.dc = derive_constants(ctx.pc);
  ctx.fingerprint = constants_fingerprint(ctx.pc);
  return ctx;
}

CelestialBody body_or_earth(const std::string& path) {
  return path.empty() ? CelestialBody::earth() : load_body_file(path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Subcommands

struct Options {
  std::string constants_file;
  bool json = false;
  bool si = false;

  // boost
  double E = 0.0, Q = 0.0, theta = 0.0;
  bool linear = false;
  double m = 0.0, e = 0.0;

  // potential
  double m1 = 0.0, e1 = 0.0, m2 = 0.0, e2 = 0.0, r = 0.0;
  bool primed = false;

  // earth-fit / dipole / sweep
  double field_v_per_m = 0.0;
  std::string body_file;
  double observed_dipole = kObservedEarthDipole;
  double theta_min = 0.0, theta_max = 0.0;
  int n = 0;
  std::string target = "sigma";

  // simulate / sweep
  std::string config_file;
  std::string out_file;
};

int run_constants(const Context& ctx, const Options& opt, std::ostream& out) {
  Report report("constants");
  auto& fundamental = report.section("fundamental");
  for (const auto& c : constant_rows(ctx.pc)) {
    fundamental.rows.push_back(
        row(c.name, c.value, c.gaussian_unit, c.name == "k_newton" ? "gravitational constant" : ""));
  }
  auto& derived = report.section("derived");
  derived.rows.push_back(row("ell", ctx.dc.ell, "cm"));
  derived.rows.push_back(scalar("ell_over_L_p", (ctx.dc.ell / ctx.pc.L_p).in(dims::dimensionless)));
  derived.rows.push_back(row("kappa", ctx.dc.kappa, "(statC/g)^2", "charge per mass squared"));
  derived.rows.push_back(row("sqrt_kappa", ctx.dc.sqrt_kappa, "statC/g"));
  derived.rows.push_back(row("sigma_per_theta", ctx.dc.sigma_per_theta, "statC/g"));
  report.print(out, opt.json, true);
  if (!opt.json) out << "\nfingerprint " << ctx.fingerprint << "  (" << ctx.constants_source << ")\n";
  return kExitOk;
}

int run_boost(const Context& ctx, const Options& opt, std::ostream& out) {
  const ChargeEnergyPair in{{opt.E, dims::energy}, {opt.Q, dims::charge}};
  const ChargeEnergyPair boosted = boost_exact(in, opt.theta, ctx.dc, ctx.pc);
  Report report("boost");
  auto& exact = report.section("exact");
  exact.rows.push_back(scalar("theta", opt.theta));
  exact.rows.push_back(row("E", in.E, "erg"));
  exact.rows.push_back(row("Q", in.Q, "statC"));
  exact.rows.push_back(row("E_boosted", boosted.E, "erg"));
  exact.rows.push_back(row("Q_boosted", boosted.Q, "statC"));
  exact.rows.push_back(row("invariant", boost_invariant(in, ctx.dc, ctx.pc), "erg^2"));
  exact.rows.push_back(row("invariant_boosted", boost_invariant(boosted, ctx.dc, ctx.pc), "erg^2"));
  if (opt.linear) {
    const ChargeMassPair pair = ChargeMassPair::physical(opt.m, opt.e);
    const LinearBoost lin = boost_linear(pair, opt.theta, ctx.dc);
    auto& s = report.section("linear");
    s.rows.push_back(row("m", pair.m, "g"));
    s.rows.push_back(row("e", pair.e, "statC"));
    s.rows.push_back(row("m_boosted", lin.pair.m, "g"));
    s.rows.push_back(row("e_boosted", lin.pair.e, "statC"));
    s.rows.push_back(row("delta_m", lin.deltas.delta_m, "g"));
    s.rows.push_back(row("delta_e", lin.deltas.delta_e, "statC"));
    if (pair.m.value() > 0.0) {
      s.rows.push_back(scalar("residual_vs_exact", linear_vs_exact_residual(pair, opt.theta, ctx.dc, ctx.pc)));
    }
  }
  report.print(out, opt.json, opt.si);
  return kExitOk;
}

int run_potential(const Context& ctx, const Options& opt, std::ostream& out) {
  ParticleSpecies p1, p2;
  Quantity r;
  if (opt.si) {
    p1 = {"1", from_si(opt.m1, dims::mass), from_si(opt.e1, dims::charge)};
    p2 = {"2", from_si(opt.m2, dims::mass), from_si(opt.e2, dims::charge)};
    r = from_si(opt.r, dims::length);
  } else {
    p1 = ParticleSpecies::make("1", opt.m1, opt.e1);
    p2 = ParticleSpecies::make("2", opt.m2, opt.e2);
    r = {opt.r, dims::length};
  }
  if (p1.m.value() < 0.0 || p2.m.value() < 0.0) throw UsageError("masses must be non-negative");

  const Quantity sigma = derive_sigma(ctx.dc, ctx.pc, opt.theta);
  const PairCoupling coupling =
      opt.primed ? coupling_primed(p1, p2, opt.theta, ctx.dc, ctx.pc) : coupling_unprimed(p1, p2, sigma, ctx.pc);
  const Quantity v = potential_energy(coupling, r);
  const Quantity f = radial_force(coupling, r);

  Report report("potential");
  auto& s = report.section(opt.primed ? "primed" : "unprimed");
  s.rows.push_back(scalar("theta", opt.theta));
  s.rows.push_back(row("sigma", sigma, "statC/g"));
  s.rows.push_back(row("r", r, "cm"));
  s.rows.push_back(row("coupling_A", coupling.A, "erg*cm"));
  s.rows.push_back(row("potential_energy", v, "erg"));
  s.rows.push_back(row("radial_force", f, "dyn"));
  if (opt.primed) {
    s.rows.push_back(row("remainder_vs_unprimed", primed_remainder(p1, p2, opt.theta, ctx.dc, ctx.pc), "erg*cm"));
  }
  report.print(out, opt.json, opt.si);
  return kExitOk;
}

int run_earth_fit(const Context& ctx, const Options& opt, std::ostream& out) {
  const CelestialBody body = body_or_earth(opt.body_file);
  const Quantity target = from_si(opt.field_v_per_m, dims::electric_field);
  const EarthFitResult fit = fit_theta_from_field(body, target, ctx.dc, ctx.pc);
  Report report("earth-fit");
  auto& s = report.section("fit");
  s.rows.push_back(scalar("theta", fit.theta));
  s.rows.push_back(row("sigma", fit.sigma, "statC/g"));
  s.rows.push_back(row("Q_eff", fit.Q_eff, "statC"));
  s.rows.push_back(row("target_field", target, "statV/cm"));
  s.rows.push_back(row("field_check", fit.field_check, "statV/cm"));
  report.print(out, opt.json, true);
  if (!opt.json) out << "\nbody " << body.label << ", target " << format_g(opt.field_v_per_m, 10) << " V/m\n";
  return kExitOk;
}

int run_dipole(const Context& ctx, const Options& opt, std::ostream& out) {
  const CelestialBody body = body_or_earth(opt.body_file);
  const Quantity sigma = derive_sigma(ctx.dc, ctx.pc, opt.theta);
  const Quantity mu = magnetic_dipole(body, sigma, ctx.pc);
  Report report("dipole");
  auto& s = report.section("dipole");
  s.rows.push_back(scalar("theta", opt.theta));
  s.rows.push_back(row("sigma", sigma, "statC/g"));
  s.rows.push_back(row("Q_eff", effective_charge(body, sigma), "statC"));
  s.rows.push_back(row("magnetic_moment", mu, "G*cm^3"));
  s.rows.push_back(row("observed_moment", {opt.observed_dipole, dims::magnetic_moment}, "G*cm^3"));
  s.rows.push_back(scalar("ratio_to_observed", mu.value() / opt.observed_dipole));
  report.print(out, opt.json, opt.si);
  return kExitOk;
}

void write_manifest(const Context& ctx, const std::string& command,
                    std::map<std::string, std::string> inputs, const std::string& output,
                    std::chrono::steady_clock::time_point start) {
  RunManifest manifest;
  manifest.command = command;
  manifest.inputs = std::move(inputs);
  manifest.inputs["constants"] = ctx.constants_source;
  manifest.constants_fingerprint = ctx.fingerprint;
  manifest.outputs = {output};
  manifest.wall_time_s = seconds_since(start);
  manifest.write(manifest.default_path());
}

int run_sweep(const Context& ctx, const Options& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SweepTarget target = parse_sweep_target(opt.target);
  const CelestialBody body = body_or_earth(opt.body_file);
  const auto rows = cmd_sweep(opt.theta_min, opt.theta_max, opt.n, target, body, ctx.dc, ctx.pc);

  std::ostringstream csv;
  csv << "theta,value\n";
  for (const auto& r : rows) csv << format_g(r.theta) << ',' << format_g(r.value) << '\n';

  if (!opt.out_file.empty()) {
    std::ofstream f(opt.out_file, std::ios::binary);
    if (!f) throw Error("cannot write " + opt.out_file);
    f << csv.str();
    f.close();
    write_manifest(ctx, "sweep",
                   {{"theta_min", format_g(opt.theta_min)},
                    {"theta_max", format_g(opt.theta_max)},
                    {"n", std::to_string(opt.n)},
                    {"target", opt.target},
                    {"body", opt.body_file.empty() ? "Earth (default)" : opt.body_file}},
                   opt.out_file, start);
  }

  if (opt.json) {
    nlohmann::ordered_json doc;
    doc["command"] = "sweep";
    doc["target"] = opt.target;
    doc["unit"] = sweep_unit(target);
    doc["body"] = body.label;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back({{"theta", r.theta}, {"value", r.value}});
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << '\n';
  } else if (opt.out_file.empty()) {
    out << csv.str();
  } else {
    out << "wrote " << rows.size() << " rows to " << opt.out_file << '\n';
  }
  return kExitOk;
}

int run_simulate(const Context& ctx, const Options& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const SimulationSetup setup = parse_simulation_config(read_file(opt.config_file));

  std::ofstream csv(opt.out_file, std::ios::binary);
  if (!csv) throw Error("cannot write " + opt.out_file);
  CsvSnapshotWriter writer(csv);
  const std::map<std::string, std::string> inputs{{"config", opt.config_file},
                                                  {"dt_s", format_g(setup.cfg.dt_s)},
                                                  {"steps", std::to_string(setup.cfg.steps)},
                                                  {"output_every", std::to_string(setup.cfg.output_every)},
                                                  {"theta", format_g(setup.cfg.theta)},
                                                  {"softening_cm", format_g(setup.cfg.softening_cm)}};
  SystemState final_state;
  try {
    final_state = simulate(setup.initial, setup.cfg, ctx.dc, ctx.pc, writer);
  } catch (const Error&) {
    csv.close();
    write_manifest(ctx, "simulate", inputs, opt.out_file, start);
    throw;
  }
  csv.close();
  write_manifest(ctx, "simulate", inputs, opt.out_file, start);

  const EnergyReport e0 = total_energy(setup.initial, setup.cfg, ctx.dc, ctx.pc);
  const EnergyReport e1 = total_energy(final_state, setup.cfg, ctx.dc, ctx.pc);
  Report report("simulate");
  auto& s = report.section("run");
  s.rows.push_back(scalar("particles", static_cast<double>(setup.initial.particles.size())));
  s.rows.push_back(scalar("steps", static_cast<double>(setup.cfg.steps)));
  s.rows.push_back(row("t_final", {final_state.t_s, dims::time}, "s"));
  s.rows.push_back(row("energy_initial", e0.total, "erg"));
  s.rows.push_back(row("energy_final", e1.total, "erg"));
  const double denom = std::fabs(e0.total.value());
  s.rows.push_back(scalar("relative_energy_error",
                          denom > 0.0 ? (e1.total.value() - e0.total.value()) / denom : 0.0));
  report.print(out, opt.json, opt.si);
  return kExitOk;
}

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"thetamix: charge-mass mixing constants, boosts, potentials, fits and N-body runs",
               args.empty() ? "thetamix" : args.front()};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--constants", opt.constants_file,
                 "JSON file overriding any of the seven fundamental constants "
                 "(default: $THETAMIX_CONSTANTS, then the pinned CODATA 2018 set)");

  auto add_output_flags = [&opt](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Print a single JSON document");
    sub->add_flag("--si", opt.si, "SI columns on output (and SI inputs where supported)");
  };

  auto* constants = app.add_subcommand("constants", "Print fundamental and derived constants");
  add_output_flags(constants);

  auto* boost = app.add_subcommand("boost", "Apply the exact (and optionally linearized) theta boost");
  boost->add_option("--E", opt.E, "Energy, erg")->required();
  boost->add_option("--Q", opt.Q, "Charge, statC")->required();
  boost->add_option("--theta", opt.theta, "Mixing angle")->required();
  auto* linear = boost->add_flag("--linear", opt.linear, "Also apply the first-order (m, e) mixing");
  boost->add_option("--m", opt.m, "Mass, g (with --linear)")->needs(linear);
  boost->add_option("--e", opt.e, "Charge, statC (with --linear)")->needs(linear);
  add_output_flags(boost);

  auto* potential = app.add_subcommand("potential", "Two-body coupling, potential energy and force");
  potential->add_option("--m1", opt.m1, "Mass 1, g (kg with --si)");
  potential->add_option("--e1", opt.e1, "Charge 1, statC (C with --si)");
  potential->add_option("--m2", opt.m2, "Mass 2, g (kg with --si)");
  potential->add_option("--e2", opt.e2, "Charge 2, statC (C with --si)");
  potential->add_option("--r", opt.r, "Separation, cm (m with --si)")->required();
  potential->add_option("--theta", opt.theta, "Mixing angle");
  potential->add_flag("--primed", opt.primed, "Use the observable (primed) form");
  add_output_flags(potential);

  auto* earth_fit = app.add_subcommand("earth-fit", "Fit theta to a surface radial electric field");
  earth_fit->add_option("--field-v-per-m", opt.field_v_per_m, "Signed radial field, V/m (negative = downward)")
      ->required();
  earth_fit->add_option("--body", opt.body_file, "Body JSON file (default: Earth)");
  add_output_flags(earth_fit);

  auto* dipole = app.add_subcommand("dipole", "Rotating-sphere magnetic moment for a given theta");
  dipole->add_option("--theta", opt.theta, "Mixing angle")->required();
  dipole->add_option("--body", opt.body_file, "Body JSON file (default: Earth)");
  dipole->add_option("--observed", opt.observed_dipole, "Observed moment for comparison, G cm^3");
  add_output_flags(dipole);

  auto* sweep = app.add_subcommand("sweep", "Evaluate sigma, surface_field or dipole on a theta grid");
  sweep->add_option("--theta-min", opt.theta_min, "Grid start")->required();
  sweep->add_option("--theta-max", opt.theta_max, "Grid end")->required();
  sweep->add_option("--n", opt.n, "Number of grid points (>= 2)")->required();
  sweep->add_option("--target", opt.target, "sigma | surface_field | dipole");
  sweep->add_option("--body", opt.body_file, "Body JSON file (default: Earth)");
  sweep->add_option("--out", opt.out_file, "Write CSV here (plus a manifest) instead of stdout");
  add_output_flags(sweep);

  auto* simulate_cmd = app.add_subcommand("simulate", "Run the leapfrog N-body integrator");
  simulate_cmd->add_option("--config", opt.config_file, "Simulation config JSON")->required();
  simulate_cmd->add_option("--out", opt.out_file, "Snapshot CSV output")->required();
  add_output_flags(simulate_cmd);

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const Context ctx = load_context(opt.constants_file);
    if (constants->parsed()) return run_constants(ctx, opt, out);
    if (boost->parsed()) return run_boost(ctx, opt, out);
    if (potential->parsed()) return run_potential(ctx, opt, out);
    if (earth_fit->parsed()) return run_earth_fit(ctx, opt, out);
    if (dipole->parsed()) return run_dipole(ctx, opt, out);
    if (sweep->parsed()) return run_sweep(ctx, opt, out);
    if (simulate_cmd->parsed()) return run_simulate(ctx, opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace thetamix::cli
