#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thetamix/units.hpp"

namespace thetamix {

/// Fundamental inputs, Gaussian CGS.
struct PhysicalConstants {
  Quantity hbar;          // erg s
  Quantity c;             // cm/s
  Quantity q;             // statC, magnitude of the electron charge
  Quantity k_newton;      // cm^3 g^-1 s^-2
  Quantity L_p;           // cm, Planck length
  Quantity alpha;         // fine-structure constant
  Quantity sin2_theta_w;  // sin^2 of the weak mixing angle

  /// CODATA 2018 plus the low-energy sin^2(theta_W) = 0.23121.
  static PhysicalConstants codata2018();

  /// Checks dimensions and signs; throws DomainError / DimensionError.
  void validate() const;
};

/// One row of the pinned constants table.
struct ConstantRow {
  std::string name;
  std::string symbol;
  Quantity value;
  std::string gaussian_unit;
  std::string source;
};

std::vector<ConstantRow> constant_rows(const PhysicalConstants& pc);

/// Applies a JSON object holding any subset of
/// {"hbar","c","q","k_newton","L_p","alpha","sin2_theta_w"} (raw CGS numbers).
/// Unknown keys and non-numeric values are UsageErrors.
PhysicalConstants apply_overrides(PhysicalConstants base, std::string_view json_text);
PhysicalConstants load_constants_file(const std::filesystem::path& path);

/// FNV-1a 64 over the 17-digit rendering of all seven inputs, as 16 hex digits.
std::string constants_fingerprint(const PhysicalConstants& pc);

struct DerivedConstants {
  Quantity ell;              // cm
  Quantity kappa;            // (statC/g)^2
  Quantity sqrt_kappa;       // statC/g
  Quantity sigma_per_theta;  // statC/g: sqrt(kappa) - k/sqrt(kappa)
};

struct KappaPair {
  Quantity kappa;
  Quantity sqrt_kappa;
};

/// ell = L_p * sqrt((10 / (3 alpha)) * (1 + 2 sin^2 theta_W)).
Quantity derive_ell(const PhysicalConstants& pc);
/// kappa = q^2 ell^2 c^2 / hbar^2.
KappaPair derive_kappa(const PhysicalConstants& pc, const Quantity& ell);
/// sigma = theta * (sqrt(kappa) - k / sqrt(kappa)).
Quantity derive_sigma(const DerivedConstants& dc, const PhysicalConstants& pc, double theta);

DerivedConstants derive_constants(const PhysicalConstants& pc);

}  // namespace thetamix
