#include "thetamix/nbody.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <set>

#include <json.hpp>

#include "thetamix/format.hpp"

namespace thetamix {

void IntegratorConfig::validate() const {
  if (!(dt_s > 0.0) || !std::isfinite(dt_s)) throw UsageError("dt_s must be positive, got " + format_g(dt_s));
  if (steps < 0) throw UsageError("steps must be non-negative");
  if (output_every < 1) throw UsageError("output_every must be a positive integer");
  if (!std::isfinite(theta)) throw UsageError("theta must be finite");
  if (!(softening_cm >= 0.0) || !std::isfinite(softening_cm)) {
    throw UsageError("softening_cm must be non-negative");
  }
}

void validate_state(const SystemState& state, double softening_cm) {
  std::set<std::string> labels;
  for (const auto& p : state.particles) {
    p.species.m.require(dims::mass, "particle mass");
    p.species.e.require(dims::charge, "particle charge");
    if (!(p.species.m.value() > 0.0)) {
      throw DomainError("particle '" + p.species.label + "' needs positive mass for inertia");
    }
    for (int k = 0; k < 3; ++k) {
      if (!std::isfinite(p.pos[k]) || !std::isfinite(p.vel[k])) {
        throw DomainError("particle '" + p.species.label + "' has a non-finite coordinate");
      }
    }
    if (!labels.insert(p.species.label).second) {
      throw UsageError("duplicate particle label '" + p.species.label + "'");
    }
  }
  if (softening_cm > 0.0) return;
  const auto& ps = state.particles;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].pos == ps[j].pos) {
        throw DomainError("coincident particles '" + ps[i].species.label + "' and '" +
                          ps[j].species.label + "'");
      }
    }
  }
}

// ---------------------------------------------------------------------------

ForceModel::ForceModel(const SystemState& state, const Quantity& sigma, const PhysicalConstants& pc,
                       double softening_cm)
    : softening_(softening_cm) {
  const std::size_t n = state.particles.size();
  masses_.reserve(n);
  couplings_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    masses_.push_back(state.particles[i].species.m.in(dims::mass));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a =
          coupling_unprimed(state.particles[i].species, state.particles[j].species, sigma, pc)
              .A.value();
      couplings_[i * n + j] = a;
      couplings_[j * n + i] = a;
    }
  }
}

ForceModel::ForceModel(std::vector<double> masses_g, std::vector<double> couplings,
                       double softening_cm)
    : masses_(std::move(masses_g)), couplings_(std::move(couplings)), softening_(softening_cm) {
  if (couplings_.size() != masses_.size() * masses_.size()) {
    throw UsageError("coupling matrix must be n x n");
  }
}

void ForceModel::accelerations(const SystemState& state, std::vector<Vec3>& out) const {
  const std::size_t n = size();
  if (state.particles.size() != n) throw UsageError("state does not match force model");
  out.assign(n, Vec3{0.0, 0.0, 0.0});
  const double eps2 = softening_ * softening_;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& xi = state.particles[i].pos;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3& xj = state.particles[j].pos;
      const Vec3 d{xi[0] - xj[0], xi[1] - xj[1], xi[2] - xj[2]};
      const double r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + eps2;
      if (r2 == 0.0) {
        throw DomainError("coincident particles '" + state.particles[i].species.label + "' and '" +
                          state.particles[j].species.label + "'");
      }
      // Force on i, directed from j to i when A > 0.
      const double s = couplings_[i * n + j] / (r2 * std::sqrt(r2));
      for (int k = 0; k < 3; ++k) {
        const double f = s * d[k];
        out[i][k] += f / masses_[i];
        out[j][k] -= f / masses_[j];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < 3; ++k) require_finite(out[i][k], "pairwise acceleration");
  }
}

EnergyReport ForceModel::energy(const SystemState& state) const {
  const std::size_t n = size();
  const double eps2 = softening_ * softening_;
  double kinetic = 0.0;
  double potential = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& v = state.particles[i].vel;
    kinetic += 0.5 * masses_[i] * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const Vec3& xi = state.particles[i].pos;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3& xj = state.particles[j].pos;
      const Vec3 d{xi[0] - xj[0], xi[1] - xj[1], xi[2] - xj[2]};
      const double r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + eps2;
      potential += couplings_[i * n + j] / std::sqrt(r2);
    }
  }
  return {{kinetic, dims::energy}, {potential, dims::energy}, {kinetic + potential, dims::energy}};
}

// ---------------------------------------------------------------------------

namespace {
ForceModel model_for(const SystemState& state, const IntegratorConfig& cfg,
                     const DerivedConstants& dc, const PhysicalConstants& pc) {
  return ForceModel(state, derive_sigma(dc, pc, cfg.theta), pc, cfg.softening_cm);
}
}  // namespace

std::vector<Vec3> pairwise_accel(const SystemState& state, const IntegratorConfig& cfg,
                                 const DerivedConstants& dc, const PhysicalConstants& pc) {
  std::vector<Vec3> acc;
  model_for(state, cfg, dc, pc).accelerations(state, acc);
  return acc;
}

void LeapfrogIntegrator::step(SystemState& state, double dt) {
  auto& ps = state.particles;
  if (!have_acc_) {
    model_.accelerations(state, acc_);
    have_acc_ = true;
  }
  const double half = 0.5 * dt;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      ps[i].vel[k] += acc_[i][k] * half;
      ps[i].pos[k] += ps[i].vel[k] * dt;
    }
  }
  state.t_s += dt;
  model_.accelerations(state, acc_);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (int k = 0; k < 3; ++k) ps[i].vel[k] += acc_[i][k] * half;
  }
}

SystemState step_leapfrog(const SystemState& state, const IntegratorConfig& cfg,
                          const DerivedConstants& dc, const PhysicalConstants& pc) {
  if (!std::isfinite(cfg.dt_s)) throw UsageError("dt_s must be finite");
  LeapfrogIntegrator integrator(model_for(state, cfg, dc, pc));
  SystemState next = state;
  integrator.step(next, cfg.dt_s);
  return next;
}

EnergyReport total_energy(const SystemState& state, const IntegratorConfig& cfg,
                          const DerivedConstants& dc, const PhysicalConstants& pc) {
  return model_for(state, cfg, dc, pc).energy(state);
}

KeplerOrbit kepler_reference(const ParticleSpecies& p1, const ParticleSpecies& p2,
                             const Quantity& sigma, const Quantity& r_circ,
                             const PhysicalConstants& pc) {
  r_circ.require(dims::length, "orbit radius");
  if (!(r_circ.value() > 0.0)) throw DomainError("non-positive separation");
  const PairCoupling c = coupling_unprimed(p1, p2, sigma, pc);
  if (!c.attractive()) throw DomainError("unbound pair: A = " + format_g(c.A.value()) + " erg*cm");
  const Quantity reduced = (p1.m * p2.m) / (p1.m + p2.m);
  const Quantity speed = qty_sqrt(abs(c.A) / (reduced * r_circ));
  speed.require(dims::velocity, "orbital speed");
  const Quantity period = (2.0 * std::numbers::pi) * r_circ / speed;
  return {period, speed};
}

// ---------------------------------------------------------------------------

CsvSnapshotWriter::CsvSnapshotWriter(std::ostream& out) : out_(out) { out_ << kHeader << '\n'; }

void CsvSnapshotWriter::snapshot(std::int64_t step, const SystemState& state,
                                 const EnergyReport& energy) {
  const std::string t = format_g(state.t_s);
  const std::string ke = format_g(energy.kinetic.value());
  const std::string pe = format_g(energy.potential.value());
  const std::string et = format_g(energy.total.value());
  for (const auto& p : state.particles) {
    out_ << step << ',' << t << ',' << p.species.label;
    for (double x : p.pos) out_ << ',' << format_g(x);
    for (double v : p.vel) out_ << ',' << format_g(v);
    out_ << ',' << ke << ',' << pe << ',' << et << '\n';
  }
}

void CsvSnapshotWriter::error(std::int64_t step, const SystemState& state,
                              std::string_view message) {
  std::string clean(message);
  for (char& ch : clean) {
    if (ch == '\n' || ch == ',') ch = ' ';
  }
  out_ << "#error," << step << ',' << format_g(state.t_s) << ',' << clean << '\n';
  out_.flush();
}

SystemState simulate(const SystemState& initial, const IntegratorConfig& cfg, ForceModel model,
                     SnapshotSink& sink) {
  cfg.validate();
  validate_state(initial, cfg.softening_cm);
  LeapfrogIntegrator integrator(std::move(model));
  SystemState state = initial;
  std::int64_t step = 0;
  try {
    sink.snapshot(0, state, integrator.model().energy(state));
    for (step = 1; step <= cfg.steps; ++step) {
      integrator.step(state, cfg.dt_s);
      if (step % cfg.output_every == 0) sink.snapshot(step, state, integrator.model().energy(state));
    }
  } catch (const Error& e) {
    sink.error(step, state, e.what());
    throw;
  }
  return state;
}

SystemState simulate(const SystemState& initial, const IntegratorConfig& cfg,
                     const DerivedConstants& dc, const PhysicalConstants& pc, SnapshotSink& sink) {
  cfg.validate();
  validate_state(initial, cfg.softening_cm);
  return simulate(initial, cfg, model_for(initial, cfg, dc, pc), sink);
}

// ---------------------------------------------------------------------------

namespace {
double number_field(const nlohmann::json& obj, const char* key, double fallback, bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw UsageError(std::string("config is missing '") + key + "'");
    return fallback;
  }
  if (!it->is_number()) throw UsageError(std::string("config '") + key + "' must be a number");
  return it->get<double>();
}

std::int64_t integer_field(const nlohmann::json& obj, const char* key, std::int64_t fallback,
                           bool required) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) throw UsageError(std::string("config is missing '") + key + "'");
    return fallback;
  }
  if (!it->is_number_integer()) throw UsageError(std::string("config '") + key + "' must be an integer");
  return it->get<std::int64_t>();
}

Vec3 vec_field(const nlohmann::json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw UsageError(std::string("particle is missing '") + key + "'");
  if (!it->is_array() || it->size() != 3) {
    throw UsageError(std::string("particle '") + key + "' must be an array of 3 numbers");
  }
  Vec3 v{};
  for (std::size_t k = 0; k < 3; ++k) {
    if (!(*it)[k].is_number()) throw UsageError(std::string("particle '") + key + "' must be numeric");
    v[k] = (*it)[k].get<double>();
  }
  return v;
}
}  // namespace

SimulationSetup parse_simulation_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("simulation config: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("simulation config must be a JSON object");

  SimulationSetup setup;
  setup.cfg.dt_s = number_field(doc, "dt_s", 0.0, true);
  setup.cfg.steps = integer_field(doc, "steps", 0, true);
  setup.cfg.output_every = integer_field(doc, "output_every", 1, false);
  setup.cfg.theta = number_field(doc, "theta", 0.0, false);
  setup.cfg.softening_cm = number_field(doc, "softening_cm", 0.0, false);

  const auto ps = doc.find("particles");
  if (ps == doc.end() || !ps->is_array()) throw UsageError("config needs a 'particles' array");
  std::size_t index = 0;
  for (const auto& p : *ps) {
    if (!p.is_object()) throw UsageError("each particle must be a JSON object");
    std::string label = "p" + std::to_string(index);
    if (const auto it = p.find("label"); it != p.end()) {
      if (!it->is_string()) throw UsageError("particle 'label' must be a string");
      label = it->get<std::string>();
    }
    Particle particle{ParticleSpecies::make(label, number_field(p, "m_g", 0.0, true),
                                            number_field(p, "e_statC", 0.0, false)),
                      vec_field(p, "pos_cm"), vec_field(p, "vel_cm_s")};
    setup.initial.particles.push_back(std::move(particle));
    ++index;
  }
  setup.cfg.validate();
  validate_state(setup.initial, setup.cfg.softening_cm);
  return setup;
}

}  // namespace thetamix
