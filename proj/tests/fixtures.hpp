#pragma once

// Shared dynamics fixtures for the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <string>

#include "thetamix/nbody.hpp"

namespace thetamix::testing {

struct CircularOrbit {
  SystemState state;
  KeplerOrbit orbit;
  double sigma = 0.0;
};

/// Two bodies on a circular orbit of separation r about their centre of
/// mass, built from kepler_reference: relative separation along +x,
/// relative velocity along +y.
inline CircularOrbit circular_orbit(const ParticleSpecies& a, const ParticleSpecies& b, double theta,
                                    double r, const DerivedConstants& dc, const PhysicalConstants& pc) {
  const Quantity sigma = derive_sigma(dc, pc, theta);
  const KeplerOrbit orbit = kepler_reference(a, b, sigma, {r, dims::length}, pc);
  const double ma = a.m.value(), mb = b.m.value(), total = ma + mb;
  const double v = orbit.speed.value();
  CircularOrbit out;
  out.orbit = orbit;
  out.sigma = sigma.value();
  out.state.particles = {
      {a, {mb / total * r, 0.0, 0.0}, {0.0, mb / total * v, 0.0}},
      {b, {-ma / total * r, 0.0, 0.0}, {0.0, -ma / total * v, 0.0}},
  };
  return out;
}

/// Oppositely charged pair with a noticeable sigma cross term: A is
/// dominated by e1 e2 but every term of the coupling contributes.
inline CircularOrbit charged_binary(double theta, const DerivedConstants& dc, const PhysicalConstants& pc) {
  const auto a = ParticleSpecies::make("heavy", 2.0, 3.0e-4);
  const auto b = ParticleSpecies::make("light", 1.0, -4.0e-4);
  return circular_orbit(a, b, theta, 1.0, dc, pc);
}

/// Records every snapshot as CSV text.
inline std::string run_to_csv(const SystemState& initial, const IntegratorConfig& cfg, const DerivedConstants& dc,
                              const PhysicalConstants& pc) {
  std::ostringstream os;
  CsvSnapshotWriter writer(os);
  simulate(initial, cfg, dc, pc, writer);
  return os.str();
}

inline double wrapped_angle(const SystemState& s) {
  const Vec3& p = s.particles[0].pos;
  const Vec3& q = s.particles[1].pos;
  return std::atan2(p[1] - q[1], p[0] - q[0]);
}

/// Time for the relative separation vector to sweep 2 pi, by linear
/// interpolation of the unwrapped angle between steps.
inline double measure_period(SystemState state, LeapfrogIntegrator& integrator, double dt, std::int64_t max_steps) {
  double prev_angle = 0.0;
  double unwrapped = 0.0;
  double last = wrapped_angle(state);
  for (std::int64_t i = 0; i < max_steps; ++i) {
    const double t0 = state.t_s;
    integrator.step(state, dt);
    const double now = wrapped_angle(state);
    double d = now - last;
    if (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    if (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    last = now;
    prev_angle = unwrapped;
    unwrapped += d;
    if (std::fabs(unwrapped) >= 2.0 * std::numbers::pi) {
      const double frac = (2.0 * std::numbers::pi - std::fabs(prev_angle)) / std::fabs(unwrapped - prev_angle);
      return t0 + frac * dt;
    }
  }
  return NAN;
}

}  // namespace thetamix::testing
