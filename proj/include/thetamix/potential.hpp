#pragma once

// Two-body Newton-Coulomb law with the theta-mixing cross term.
//
// Sign convention used throughout: V > 0 is repulsive, and radial force is
// positive when it points outward along the separation.

#include <string>

#include "thetamix/constants.hpp"
#include "thetamix/units.hpp"

namespace thetamix {

/// Intrinsic (unprimed) mass and charge of a particle or body.
struct ParticleSpecies {
  std::string label;
  Quantity m;  // g
  Quantity e;  // statC

  static ParticleSpecies make(std::string label, double mass_g, double charge_statC);
};

/// Numerator A of V(r) = A / r, in erg*cm. Attractive iff A < 0.
struct PairCoupling {
  Quantity A;

  bool attractive() const { return A.value() < 0.0; }
};

/// A = e1 e2 - k m1 m2 + sigma (e1 m2 + m1 e2).
PairCoupling coupling_unprimed(const ParticleSpecies& p1, const ParticleSpecies& p2,
                               const Quantity& sigma, const PhysicalConstants& pc);

/// A' = e1' e2' - k m1' m2' with both species mapped through boost_linear.
PairCoupling coupling_primed(const ParticleSpecies& p1, const ParticleSpecies& p2, double theta,
                             const DerivedConstants& dc, const PhysicalConstants& pc);

/// theta^2 (kappa m1 m2 - k e1 e2 / kappa): what the primed form adds on top
/// of the unprimed form at the same theta.
Quantity primed_remainder(const ParticleSpecies& p1, const ParticleSpecies& p2, double theta,
                          const DerivedConstants& dc, const PhysicalConstants& pc);

/// V = A / r (erg). r <= 0 throws "non-positive separation".
Quantity potential_energy(const PairCoupling& coupling, const Quantity& r);

/// F = A / r^2 (dyn), positive outward.
Quantity radial_force(const PairCoupling& coupling, const Quantity& r);

}  // namespace thetamix
