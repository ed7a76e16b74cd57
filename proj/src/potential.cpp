#include "thetamix/potential.hpp"

#include "thetamix/format.hpp"
#include "thetamix/mixing.hpp"

namespace thetamix {

ParticleSpecies ParticleSpecies::make(std::string label, double mass_g, double charge_statC) {
  if (mass_g < 0.0) throw DomainError("species '" + label + "' has negative mass");
  return {std::move(label), {mass_g, dims::mass}, {charge_statC, dims::charge}};
}

namespace {
// A = e1 e2 - k m1 m2 + sigma (e1 m2 + m1 e2), evaluated in extended
// precision and rounded once.
double coupling_value(long double m1, long double e1, long double m2, long double e2,
                      long double sigma, long double k) {
  const long double a = e1 * e2 - k * (m1 * m2) + sigma * (e1 * m2 + m1 * e2);
  return require_finite(static_cast<double>(a), "pair coupling");
}
}  // namespace

PairCoupling coupling_unprimed(const ParticleSpecies& p1, const ParticleSpecies& p2,
                               const Quantity& sigma, const PhysicalConstants& pc) {
  sigma.require(dims::charge_per_mass, "sigma");
  // Dimension audit of every term; the value comes from coupling_value.
  (p1.e * p2.e).require(dims::coupling, "e1 e2");
  (pc.k_newton * (p1.m * p2.m)).require(dims::coupling, "k m1 m2");
  (sigma * (p1.e * p2.m)).require(dims::coupling, "sigma e1 m2");
  (sigma * (p1.m * p2.e)).require(dims::coupling, "sigma m1 e2");
  return {{coupling_value(p1.m.value(), p1.e.value(), p2.m.value(), p2.e.value(), sigma.value(),
                          pc.k_newton.value()),
           dims::coupling}};
}

PairCoupling coupling_primed(const ParticleSpecies& p1, const ParticleSpecies& p2, double theta,
                             const DerivedConstants& dc, const PhysicalConstants& pc) {
  // Observable (m', e') per boost_linear, kept in extended precision.
  const long double sk = dc.sqrt_kappa.in(dims::charge_per_mass);
  const long double th = theta;
  auto observe = [&](const ParticleSpecies& p) {
    boost_linear({p.m, p.e}, theta, dc);  // dimension checks
    const long double m = p.m.value();
    const long double e = p.e.value();
    return std::pair{m + th * e / sk, e + th * sk * m};
  };
  const auto [m1, e1] = observe(p1);
  const auto [m2, e2] = observe(p2);
  return {{coupling_value(m1, e1, m2, e2, 0.0L, pc.k_newton.in(dims::gravitational)), dims::coupling}};
}

Quantity primed_remainder(const ParticleSpecies& p1, const ParticleSpecies& p2, double theta,
                          const DerivedConstants& dc, const PhysicalConstants& pc) {
  const Quantity x = dc.kappa * (p1.m * p2.m);
  const Quantity y = pc.k_newton * (p1.e * p2.e) / dc.kappa;
  (x - y).require(dims::coupling, "primed remainder");
  const long double kappa = dc.kappa.value();
  const long double th = theta;
  const long double r = th * th *
                        (kappa * p1.m.value() * p2.m.value() -
                         static_cast<long double>(pc.k_newton.value()) * p1.e.value() * p2.e.value() / kappa);
  return {static_cast<double>(r), dims::coupling};
}

namespace {
void require_separation(const Quantity& r) {
  r.require(dims::length, "separation");
  if (!(r.value() > 0.0)) throw DomainError("non-positive separation: r = " + format_g(r.value()));
}
}  // namespace

Quantity potential_energy(const PairCoupling& coupling, const Quantity& r) {
  require_separation(r);
  return coupling.A / r;
}

Quantity radial_force(const PairCoupling& coupling, const Quantity& r) {
  require_separation(r);
  return coupling.A / (r * r);
}

}  // namespace thetamix
