#pragma once

// Hyperbolic theta-mixing of energy and charge.
//
// The exact transform rotates (E, Q) with cosh/sinh weights and conversion
// factor hbar c / (ell q) between charge and energy; it preserves
// E^2 - (hbar c / (ell q))^2 Q^2. The nonrelativistic, first-order form acts
// on (m, e) with E = m c^2 and drops O(theta^2) terms.

#include "thetamix/constants.hpp"
#include "thetamix/units.hpp"

namespace thetamix {

struct ChargeEnergyPair {
  Quantity E;  // erg
  Quantity Q;  // statC
};

struct ChargeMassPair {
  Quantity m;  // g
  Quantity e;  // statC

  /// Physical constructor: requires m >= 0.
  static ChargeMassPair physical(double mass_g, double charge_statC);
};

struct LinearDeltas {
  Quantity delta_m;  // kappa^-1/2 theta e
  Quantity delta_e;  // kappa^1/2 theta m
};

struct LinearBoost {
  ChargeMassPair pair;
  LinearDeltas deltas;
};

/// Largest |theta| accepted by boost_exact; cosh overflows a double near 710.
inline constexpr double kMaxExactTheta = 700.0;

/// hbar c / (ell q), in erg/statC.
Quantity energy_per_charge(const DerivedConstants& dc, const PhysicalConstants& pc);

ChargeEnergyPair boost_exact(const ChargeEnergyPair& s, double theta, const DerivedConstants& dc,
                             const PhysicalConstants& pc);

/// E^2 - (hbar c / (ell q))^2 Q^2, in erg^2.
Quantity boost_invariant(const ChargeEnergyPair& s, const DerivedConstants& dc,
                         const PhysicalConstants& pc);

/// m' = m + theta e / sqrt(kappa), e' = e + theta sqrt(kappa) m.
/// Meant for |theta| << 1; nothing is enforced.
LinearBoost boost_linear(const ChargeMassPair& s, double theta, const DerivedConstants& dc);

/// Embeds (m, e) as (m c^2, e), applies boost_exact, maps back with m = E / c^2
/// and returns the larger relative deviation from boost_linear over (m, e).
double linear_vs_exact_residual(const ChargeMassPair& s, double theta, const DerivedConstants& dc,
                                const PhysicalConstants& pc);

}  // namespace thetamix
