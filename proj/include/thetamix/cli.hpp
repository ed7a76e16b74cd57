#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "thetamix/constants.hpp"
#include "thetamix/geosphere.hpp"

namespace thetamix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (program name first) and runs one subcommand.
/// Returns 0 on success, 1 on a runtime/physics error, 2 on a usage error.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class SweepTarget { sigma, surface_field, dipole };

struct SweepRow {
  double theta;
  double value;
};

/// n >= 2 points on [theta_min, theta_max]; the last point is theta_max exactly.
std::vector<double> theta_grid(double theta_min, double theta_max, int n);

SweepTarget parse_sweep_target(const std::string& name);
std::string sweep_unit(SweepTarget target);

/// Evaluates the target on theta_grid; n < 2 or theta_min >= theta_max is a
/// UsageError.
std::vector<SweepRow> cmd_sweep(double theta_min, double theta_max, int n, SweepTarget target,
                                const CelestialBody& body, const DerivedConstants& dc,
                                const PhysicalConstants& pc);

}  // namespace thetamix::cli
