#pragma once

// Deterministic N-body dynamics under the sigma-corrected Newton-Coulomb
// pair law, integrated with kick-drift-kick leapfrog.
//
// State is held as raw CGS doubles (cm, cm/s, s); dimensions are checked once
// when species and configs are ingested, never inside the step loop.
// Pairs are always visited in (i < j) order so results are bitwise
// reproducible.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "thetamix/constants.hpp"
#include "thetamix/potential.hpp"
#include "thetamix/units.hpp"

namespace thetamix {

using Vec3 = std::array<double, 3>;

struct Particle {
  ParticleSpecies species;
  Vec3 pos{};  // cm
  Vec3 vel{};  // cm/s
};

struct SystemState {
  double t_s = 0.0;
  std::vector<Particle> particles;
};

struct IntegratorConfig {
  double dt_s = 0.0;
  std::int64_t steps = 0;
  std::int64_t output_every = 1;
  double theta = 0.0;
  double softening_cm = 0.0;

  void validate() const;
};

struct EnergyReport {
  Quantity kinetic;    // erg
  Quantity potential;  // erg
  Quantity total;      // erg
};

/// Masses and pair couplings frozen for one run. Coupling(i, j) is the
/// numerator A_ij of the pair potential A_ij / r_ij.
class ForceModel {
 public:
  /// Couplings from coupling_unprimed with the given sigma.
  ForceModel(const SystemState& state, const Quantity& sigma, const PhysicalConstants& pc,
             double softening_cm);
  /// Explicit couplings, row-major n x n (only i < j entries are read).
  ForceModel(std::vector<double> masses_g, std::vector<double> couplings, double softening_cm);

  std::size_t size() const { return masses_.size(); }
  double mass(std::size_t i) const { return masses_[i]; }
  double coupling(std::size_t i, std::size_t j) const { return couplings_[i * size() + j]; }
  double softening() const { return softening_; }

  /// a_i = sum_j A_ij (x_i - x_j) / (m_i (|x_i - x_j|^2 + eps^2)^(3/2)).
  /// Throws DomainError naming the pair when two particles coincide and eps = 0.
  void accelerations(const SystemState& state, std::vector<Vec3>& out) const;
  EnergyReport energy(const SystemState& state) const;

 private:
  std::vector<double> masses_;
  std::vector<double> couplings_;
  double softening_;
};

std::vector<Vec3> pairwise_accel(const SystemState& state, const IntegratorConfig& cfg,
                                 const DerivedConstants& dc, const PhysicalConstants& pc);

/// One kick-drift-kick step of size cfg.dt_s (negative dt steps backwards).
SystemState step_leapfrog(const SystemState& state, const IntegratorConfig& cfg,
                          const DerivedConstants& dc, const PhysicalConstants& pc);

EnergyReport total_energy(const SystemState& state, const IntegratorConfig& cfg,
                          const DerivedConstants& dc, const PhysicalConstants& pc);

/// Leapfrog driver that reuses the closing-kick acceleration as the next
/// opening kick, so one force evaluation is spent per step.
class LeapfrogIntegrator {
 public:
  explicit LeapfrogIntegrator(ForceModel model) : model_(std::move(model)) {}

  const ForceModel& model() const { return model_; }
  void step(SystemState& state, double dt);

 private:
  ForceModel model_;
  std::vector<Vec3> acc_;
  bool have_acc_ = false;
};

struct KeplerOrbit {
  Quantity period;  // s
  Quantity speed;   // cm/s, relative speed
};

/// Circular orbit of a bound pair at separation r: v = sqrt(|A| / (mu r)),
/// T = 2 pi r / v with mu the reduced mass. Throws "unbound pair" if A >= 0.
KeplerOrbit kepler_reference(const ParticleSpecies& p1, const ParticleSpecies& p2,
                             const Quantity& sigma, const Quantity& r_circ,
                             const PhysicalConstants& pc);

class SnapshotSink {
 public:
  virtual ~SnapshotSink() = default;
  virtual void snapshot(std::int64_t step, const SystemState& state, const EnergyReport& energy) = 0;
  virtual void error(std::int64_t step, const SystemState& state, std::string_view message) = 0;
};

/// CSV snapshot writer. One row per particle per snapshot, 17 significant
/// digits. A failing run ends with a "#error,<step>,<t_s>,<message>" row.
class CsvSnapshotWriter : public SnapshotSink {
 public:
  static constexpr std::string_view kHeader =
      "step,t_s,particle,x_cm,y_cm,z_cm,vx_cm_s,vy_cm_s,vz_cm_s,ke_erg,pe_erg,etot_erg";

  explicit CsvSnapshotWriter(std::ostream& out);

  void snapshot(std::int64_t step, const SystemState& state, const EnergyReport& energy) override;
  void error(std::int64_t step, const SystemState& state, std::string_view message) override;

 private:
  std::ostream& out_;
};

/// Runs cfg.steps leapfrog steps and emits a snapshot at every step that is a
/// multiple of cfg.output_every (step 0 included).
SystemState simulate(const SystemState& initial, const IntegratorConfig& cfg,
                     const DerivedConstants& dc, const PhysicalConstants& pc, SnapshotSink& sink);

/// Same, with caller-supplied couplings.
SystemState simulate(const SystemState& initial, const IntegratorConfig& cfg, ForceModel model,
                     SnapshotSink& sink);

struct SimulationSetup {
  SystemState initial;
  IntegratorConfig cfg;
};

/// {"dt_s", "steps", "output_every", "theta", "softening_cm",
///  "particles": [{"label", "m_g", "e_statC", "pos_cm": [..], "vel_cm_s": [..]}]}
SimulationSetup parse_simulation_config(std::string_view json_text);

/// Positive masses, unique labels, finite vectors, and no coincident
/// particles unless softening is on.
void validate_state(const SystemState& state, double softening_cm);

}  // namespace thetamix
