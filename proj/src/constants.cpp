#include "thetamix/constants.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "thetamix/format.hpp"

namespace thetamix {

PhysicalConstants PhysicalConstants::codata2018() {
  return {
      .hbar = {1.054571817e-27, dims::action},
      .c = {2.99792458e10, dims::velocity},
      .q = {4.80320471e-10, dims::charge},
      .k_newton = {6.67430e-8, dims::gravitational},
      .L_p = {1.616255e-33, dims::length},
      .alpha = Quantity::dimensionless(7.2973525693e-3),
      .sin2_theta_w = Quantity::dimensionless(0.23121),
  };
}

void PhysicalConstants::validate() const {
  hbar.require(dims::action, "hbar");
  c.require(dims::velocity, "c");
  q.require(dims::charge, "q");
  k_newton.require(dims::gravitational, "k_newton");
  L_p.require(dims::length, "L_p");
  alpha.require(dims::dimensionless, "alpha");
  sin2_theta_w.require(dims::dimensionless, "sin2_theta_w");
  const std::pair<const char*, const Quantity*> positive[] = {
      {"hbar", &hbar}, {"c", &c}, {"q", &q}, {"k_newton", &k_newton}, {"L_p", &L_p}, {"alpha", &alpha}};
  for (const auto& [name, value] : positive) {
    if (!(value->value() > 0.0)) {
      throw DomainError(std::string(name) + " must be positive, got " + format_g(value->value()));
    }
  }
  const double s2 = sin2_theta_w.value();
  if (s2 < 0.0 || s2 > 1.0) {
    throw DomainError("sin2_theta_w must lie in [0, 1], got " + format_g(s2));
  }
}

std::vector<ConstantRow> constant_rows(const PhysicalConstants& pc) {
  return {
      {"hbar", "hbar", pc.hbar, "erg*s", "CODATA 2018 (exact in SI)"},
      {"c", "c", pc.c, "cm/s", "CODATA 2018 (exact)"},
      {"q", "q", pc.q, "statC", "CODATA 2018 elementary charge, 1.602176634e-19 C"},
      {"k_newton", "k", pc.k_newton, "cm^3/(g*s^2)", "CODATA 2018"},
      {"L_p", "L_p", pc.L_p, "cm", "CODATA 2018 Planck length"},
      {"alpha", "alpha", pc.alpha, "1", "CODATA 2018"},
      {"sin2_theta_w", "sin^2(theta_W)", pc.sin2_theta_w, "1", "PDG low-energy (on-shell-like) value"},
  };
}

PhysicalConstants apply_overrides(PhysicalConstants base, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("constants override: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("constants override must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (!value.is_number()) throw UsageError("constants override '" + key + "' is not a number");
    const double v = value.get<double>();
    if (key == "hbar") base.hbar = {v, dims::action};
    else if (key == "c") base.c = {v, dims::velocity};
    else if (key == "q") base.q = {v, dims::charge};
    else if (key == "k_newton") base.k_newton = {v, dims::gravitational};
    else if (key == "L_p") base.L_p = {v, dims::length};
    else if (key == "alpha") base.alpha = Quantity::dimensionless(v);
    else if (key == "sin2_theta_w") base.sin2_theta_w = Quantity::dimensionless(v);
    else throw UsageError("unknown constants override key '" + key + "'");
  }
  base.validate();
  return base;
}

PhysicalConstants load_constants_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open constants file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return apply_overrides(PhysicalConstants::codata2018(), ss.str());
}

std::string constants_fingerprint(const PhysicalConstants& pc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& row : constant_rows(pc)) {
    const std::string text = row.name + "=" + format_g(row.value.value()) + ";";
    for (unsigned char ch : text) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Quantity derive_ell(const PhysicalConstants& pc) {
  const double a = pc.alpha.in(dims::dimensionless);
  const double s2 = pc.sin2_theta_w.in(dims::dimensionless);
  if (!(a > 0.0)) throw DomainError("alpha must be positive, got " + format_g(a));
  if (s2 < 0.0 || s2 > 1.0) throw DomainError("sin2_theta_w must lie in [0, 1], got " + format_g(s2));
  const Quantity bracket = Quantity::dimensionless((10.0 / (3.0 * a)) * (1.0 + 2.0 * s2));
  Quantity ell = pc.L_p * qty_sqrt(bracket);
  ell.require(dims::length, "ell");
  return ell;
}

KappaPair derive_kappa(const PhysicalConstants& pc, const Quantity& ell) {
  ell.require(dims::length, "ell");
  if (!(ell.value() > 0.0)) throw DomainError("ell must be positive");
  Quantity sqrt_kappa = pc.q * ell * pc.c / pc.hbar;
  sqrt_kappa.require(dims::charge_per_mass, "sqrt(kappa)");
  Quantity kappa = (pc.q * pc.q) * (ell * ell) * (pc.c * pc.c) / (pc.hbar * pc.hbar);
  return {kappa, sqrt_kappa};
}

Quantity derive_sigma(const DerivedConstants& dc, const PhysicalConstants& /*pc*/, double theta) {
  Quantity sigma = theta * dc.sigma_per_theta;
  sigma.require(dims::charge_per_mass, "sigma");
  return sigma;
}

DerivedConstants derive_constants(const PhysicalConstants& pc) {
  pc.validate();
  DerivedConstants dc;
  dc.ell = derive_ell(pc);
  auto [kappa, sqrt_kappa] = derive_kappa(pc, dc.ell);
  dc.kappa = kappa;
  dc.sqrt_kappa = sqrt_kappa;
  dc.sigma_per_theta = sqrt_kappa - pc.k_newton / sqrt_kappa;
  dc.sigma_per_theta.require(dims::charge_per_mass, "sqrt(kappa) - k/sqrt(kappa)");
  return dc;
}

}  // namespace thetamix
