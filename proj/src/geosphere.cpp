#include "thetamix/geosphere.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "thetamix/format.hpp"

namespace thetamix {

CelestialBody CelestialBody::earth() {
  return {"Earth",
          {5.9722e27, dims::mass},
          {6.371e8, dims::length},
          {7.2921e-5, dims::frequency},
          {0.0, dims::charge}};
}

void CelestialBody::validate() const {
  M.require(dims::mass, "body mass");
  R.require(dims::length, "body radius");
  omega.require(dims::frequency, "body angular speed");
  e_intrinsic.require(dims::charge, "body intrinsic charge");
  if (!(M.value() > 0.0)) throw DomainError("body '" + label + "' needs positive mass");
  if (!(R.value() > 0.0)) throw DomainError("body '" + label + "' needs positive radius");
  if (omega.value() < 0.0) throw DomainError("body '" + label + "' needs non-negative omega");
}

CelestialBody body_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("body file: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("body file must hold a JSON object");

  CelestialBody body = CelestialBody::earth();
  for (const auto& [key, value] : doc.items()) {
    if (key == "label") {
      if (!value.is_string()) throw UsageError("body 'label' must be a string");
      body.label = value.get<std::string>();
      continue;
    }
    if (!value.is_number()) throw UsageError("body '" + key + "' must be a number");
    const double v = value.get<double>();
    if (key == "mass_g") body.M = {v, dims::mass};
    else if (key == "radius_cm") body.R = {v, dims::length};
    else if (key == "omega_per_s") body.omega = {v, dims::frequency};
    else if (key == "e_statC") body.e_intrinsic = {v, dims::charge};
    else throw UsageError("unknown body key '" + key + "'");
  }
  body.validate();
  return body;
}

CelestialBody load_body_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open body file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return body_from_json(ss.str());
}

Quantity effective_charge(const CelestialBody& body, const Quantity& sigma) {
  sigma.require(dims::charge_per_mass, "sigma");
  return body.e_intrinsic + sigma * body.M;
}

Quantity surface_field(const CelestialBody& body, const Quantity& sigma) {
  if (!(body.R.value() > 0.0)) throw DomainError("surface field needs R > 0");
  Quantity field = effective_charge(body, sigma) / (body.R * body.R);
  field.require(dims::electric_field, "surface field");
  return field;
}

EarthFitResult fit_theta_from_field(const CelestialBody& body, const Quantity& target_field,
                                    const DerivedConstants& dc, const PhysicalConstants& pc) {
  target_field.require(dims::electric_field, "target field");
  if (!(body.M.value() > 0.0)) throw DomainError("fit needs a body with non-zero mass");
  if (!(body.R.value() > 0.0)) throw DomainError("fit needs a body with non-zero radius");
  if (dc.sigma_per_theta.value() == 0.0) {
    throw DomainError("sqrt(kappa) - k/sqrt(kappa) vanishes; theta is unidentifiable");
  }
  EarthFitResult out;
  out.sigma = (target_field * (body.R * body.R) - body.e_intrinsic) / body.M;
  out.theta = (out.sigma / dc.sigma_per_theta).in(dims::dimensionless);
  out.Q_eff = effective_charge(body, out.sigma);
  out.field_check = surface_field(body, derive_sigma(dc, pc, out.theta));
  return out;
}

Quantity magnetic_dipole(const CelestialBody& body, const Quantity& sigma,
                         const PhysicalConstants& pc) {
  if (body.omega.value() < 0.0) throw DomainError("magnetic dipole needs omega >= 0");
  Quantity mu = effective_charge(body, sigma) * body.omega * (body.R * body.R) / (5.0 * pc.c);
  mu.require(dims::magnetic_moment, "magnetic dipole");
  return mu;
}

Quantity charge_sign_energy(const ParticleSpecies& p, const CelestialBody& body,
                            const Quantity& sigma, const Quantity& r,
                            const PhysicalConstants& /*pc*/) {
  r.require(dims::length, "separation");
  if (!(r.value() > 0.0)) throw DomainError("non-positive separation: r = " + format_g(r.value()));
  sigma.require(dims::charge_per_mass, "sigma");
  Quantity u = p.e * (sigma * body.M) / r;
  u.require(dims::energy, "interaction energy");
  return u;
}

}  // namespace thetamix
