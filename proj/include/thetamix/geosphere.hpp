#pragma once

// Planet-scale estimators driven by the charge-per-mass coupling sigma:
// effective charge sigma*M, monopole surface field, the theta fit to the
// fairweather field, a rotating-sphere dipole, and the sign of the
// interaction energy with a charged particle.

#include <filesystem>
#include <string>
#include <string_view>

#include "thetamix/constants.hpp"
#include "thetamix/potential.hpp"
#include "thetamix/units.hpp"

namespace thetamix {

struct CelestialBody {
  std::string label;
  Quantity M;            // g
  Quantity R;            // cm
  Quantity omega;        // 1/s
  Quantity e_intrinsic;  // statC

  /// M = 5.9722e27 g (IAU 2015 nominal GM / CODATA G), R = 6.371e8 cm (IUGG
  /// mean radius), omega = 7.2921e-5 1/s (sidereal), no intrinsic charge.
  static CelestialBody earth();

  void validate() const;
};

/// {"label", "mass_g", "radius_cm", "omega_per_s", "e_statC"}; missing keys
/// fall back to the Earth defaults.
CelestialBody body_from_json(std::string_view json_text);
CelestialBody load_body_file(const std::filesystem::path& path);

/// Observed geomagnetic dipole moment, G cm^3, used only as a comparison.
inline constexpr double kObservedEarthDipole = 8.0e25;

/// Fairweather field magnitude at the surface, V/m. Points downward.
inline constexpr double kFairweatherFieldVPerM = 100.0;

struct EarthFitResult {
  Quantity sigma;        // statC/g
  double theta = 0.0;
  Quantity Q_eff;        // statC
  Quantity field_check;  // statV/cm, surface_field at the fitted sigma
};

/// Q = e_intrinsic + sigma M.
Quantity effective_charge(const CelestialBody& body, const Quantity& sigma);

/// Radial field at the surface, Q / R^2 (statV/cm), positive outward.
Quantity surface_field(const CelestialBody& body, const Quantity& sigma);

/// Solves target = (e_intrinsic + sigma M) / R^2 for sigma, then
/// theta = sigma / (sqrt(kappa) - k / sqrt(kappa)).
EarthFitResult fit_theta_from_field(const CelestialBody& body, const Quantity& target_field,
                                    const DerivedConstants& dc, const PhysicalConstants& pc);

/// mu = Q omega R^2 / (5 c): uniformly charged sphere in rigid rotation (G cm^3).
Quantity magnetic_dipole(const CelestialBody& body, const Quantity& sigma,
                         const PhysicalConstants& pc);

/// U = e_p (sigma M) / r, the sigma-induced part of the particle-body
/// interaction energy. U < 0 means the particle is attracted.
Quantity charge_sign_energy(const ParticleSpecies& p, const CelestialBody& body,
                            const Quantity& sigma, const Quantity& r, const PhysicalConstants& pc);

}  // namespace thetamix
