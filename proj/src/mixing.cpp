#include "thetamix/mixing.hpp"

#include <algorithm>
#include <cmath>

#include "thetamix/format.hpp"

namespace thetamix {

ChargeMassPair ChargeMassPair::physical(double mass_g, double charge_statC) {
  if (mass_g < 0.0) throw DomainError("mass must be non-negative, got " + format_g(mass_g));
  return {{mass_g, dims::mass}, {charge_statC, dims::charge}};
}

Quantity energy_per_charge(const DerivedConstants& dc, const PhysicalConstants& pc) {
  Quantity f = pc.hbar * pc.c / (dc.ell * pc.q);
  f.require(dims::energy / dims::charge, "hbar c / (ell q)");
  return f;
}

ChargeEnergyPair boost_exact(const ChargeEnergyPair& s, double theta, const DerivedConstants& dc,
                             const PhysicalConstants& pc) {
  if (!(std::fabs(theta) <= kMaxExactTheta)) {
    throw DomainError("overflow: |theta| = " + format_g(std::fabs(theta)) + " exceeds " +
                      format_g(kMaxExactTheta));
  }
  s.E.require(dims::energy, "E");
  s.Q.require(dims::charge, "Q");
  const Quantity to_energy = energy_per_charge(dc, pc);
  const Quantity to_charge = (dc.ell * pc.q) / (pc.hbar * pc.c);
  (to_energy * s.Q).require(dims::energy, "(hbar c / (ell q)) Q");
  (to_charge * s.E).require(dims::charge, "(ell q / (hbar c)) E");

  // Extended precision so the only loss is the final rounding to double.
  const long double th = theta;
  const long double ch = std::cosh(th);
  const long double sh = std::sinh(th);
  const long double E = s.E.value();
  const long double Q = s.Q.value();
  const long double fe = to_energy.value();
  const long double fq = 1.0L / fe;  // same factor the invariant uses
  const long double e_out = ch * E + sh * (fe * Q);
  const long double q_out = ch * Q + sh * (fq * E);
  return {{static_cast<double>(e_out), dims::energy}, {static_cast<double>(q_out), dims::charge}};
}

Quantity boost_invariant(const ChargeEnergyPair& s, const DerivedConstants& dc,
                         const PhysicalConstants& pc) {
  const Quantity f = energy_per_charge(dc, pc);
  (f * s.Q).require(s.E.dim(), "(hbar c / (ell q)) Q");
  // Factored form in extended precision; E^2 - (fQ)^2 cancels badly near |E| = |fQ|.
  const long double e = s.E.value();
  const long double fq = static_cast<long double>(f.value()) * s.Q.value();
  return {static_cast<double>((e - fq) * (e + fq)), dims::energy * dims::energy};
}

LinearBoost boost_linear(const ChargeMassPair& s, double theta, const DerivedConstants& dc) {
  s.m.require(dims::mass, "m");
  s.e.require(dims::charge, "e");
  LinearDeltas d{theta * (s.e / dc.sqrt_kappa), theta * (dc.sqrt_kappa * s.m)};
  return {{s.m + d.delta_m, s.e + d.delta_e}, d};
}

namespace {
double relative_deviation(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}
}  // namespace

double linear_vs_exact_residual(const ChargeMassPair& s, double theta, const DerivedConstants& dc,
                                const PhysicalConstants& pc) {
  if (!(s.m.value() > 0.0)) throw DomainError("residual needs m > 0 to embed E = m c^2");
  const Quantity c2 = pc.c * pc.c;
  const ChargeEnergyPair exact = boost_exact({s.m * c2, s.e}, theta, dc, pc);
  const Quantity m_exact = exact.E / c2;
  const LinearBoost lin = boost_linear(s, theta, dc);
  return std::max(relative_deviation(m_exact.in(dims::mass), lin.pair.m.value()),
                  relative_deviation(exact.Q.in(dims::charge), lin.pair.e.value()));
}

}  // namespace thetamix
