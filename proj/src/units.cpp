#include "thetamix/units.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "thetamix/format.hpp"

namespace thetamix {

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Dimension::to_string() const {
  if (is_dimensionless()) return "1";
  std::string out;
  auto append = [&out](std::string_view base, Rational e) {
    if (e.is_zero()) return;
    if (!out.empty()) out += ' ';
    out += base;
    if (!(e == Rational{1})) {
      out += '^';
      out += e.to_string();
    }
  };
  append("g", g_);
  append("cm", cm_);
  append("s", s_);
  return out;
}

double require_finite(double x, std::string_view context) {
  if (!std::isfinite(x)) {
    std::string msg = "non-finite result";
    if (!context.empty()) {
      msg += " in ";
      msg += context;
    }
    throw DomainError(msg);
  }
  return x;
}

Quantity::Quantity(double value, Dimension dim) : value_(require_finite(value)), dim_(dim) {}

double Quantity::in(Dimension expected) const {
  require(expected, "quantity");
  return value_;
}

void Quantity::require(Dimension expected, std::string_view what) const {
  if (dim_ != expected) {
    throw DimensionError(std::string(what) + ": expected dimension [" + expected.to_string() +
                         "], got [" + dim_.to_string() + "]");
  }
}

namespace {
void check_same(const Quantity& a, const Quantity& b, std::string_view op) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch in " + std::string(op) + ": [" + a.dim().to_string() +
                         "] vs [" + b.dim().to_string() + "]");
  }
}
}  // namespace

Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.value_ * b.value_, a.dim_ * b.dim_};
}
Quantity operator/(const Quantity& a, const Quantity& b) {
  return {a.value_ / b.value_, a.dim_ / b.dim_};
}
Quantity operator+(const Quantity& a, const Quantity& b) {
  check_same(a, b, "addition");
  return {a.value_ + b.value_, a.dim_};
}
Quantity operator-(const Quantity& a, const Quantity& b) {
  check_same(a, b, "subtraction");
  return {a.value_ - b.value_, a.dim_};
}
Quantity operator-(const Quantity& a) { return {-a.value_, a.dim_}; }
Quantity operator*(double s, const Quantity& a) { return {s * a.value_, a.dim_}; }
Quantity operator/(const Quantity& a, double s) { return {a.value_ / s, a.dim_}; }

bool operator<(const Quantity& a, const Quantity& b) {
  check_same(a, b, "comparison");
  return a.value_ < b.value_;
}

std::string Quantity::to_string() const {
  if (dim_.is_dimensionless()) return format_g(value_);
  return format_g(value_) + " " + dim_.to_string();
}

Quantity qty_mul(const Quantity& a, const Quantity& b) { return a * b; }
Quantity qty_add(const Quantity& a, const Quantity& b) { return a + b; }

Quantity qty_pow(const Quantity& a, Rational p) {
  if (p.is_zero()) return Quantity::dimensionless(1.0);
  if (a.value() < 0.0 && !p.is_integer()) {
    throw DomainError("negative base " + format_g(a.value()) + " raised to fractional power " +
                      p.to_string());
  }
  double v;
  if (p == Rational{1, 2}) {
    v = std::sqrt(a.value());
  } else if (p.is_integer()) {
    v = std::pow(a.value(), static_cast<double>(p.num()));
  } else {
    v = std::pow(a.value(), p.to_double());
  }
  return {v, a.dim().pow(p)};
}

Quantity qty_sqrt(const Quantity& a) { return qty_pow(a, Rational{1, 2}); }

Quantity abs(const Quantity& a) { return {std::fabs(a.value()), a.dim()}; }

// ---------------------------------------------------------------------------

namespace {
// 1 C = 2997924580 statC exactly (c in cm/s divided by 10).
constexpr double kStatCPerCoulomb = 2997924580.0;

const std::array<SiConversion, 16> kTable{{
    {"dimensionless", dims::dimensionless, "1", "1", 1.0, 1.0, "identity"},
    {"mass", dims::mass, "g", "kg", 1e-3, 1e3, "exact"},
    {"length", dims::length, "cm", "m", 1e-2, 1e2, "exact"},
    {"time", dims::time, "s", "s", 1.0, 1.0, "exact"},
    {"velocity", dims::velocity, "cm/s", "m/s", 1e-2, 1e2, "exact"},
    {"energy", dims::energy, "erg", "J", 1e-7, 1e7, "exact"},
    {"force", dims::force, "dyn", "N", 1e-5, 1e5, "exact"},
    {"charge", dims::charge, "statC", "C", 1.0 / kStatCPerCoulomb, kStatCPerCoulomb,
     "1 C = 2997924580 statC"},
    {"charge per mass", dims::charge_per_mass, "statC/g", "C/kg", 1e3 / kStatCPerCoulomb,
     kStatCPerCoulomb / 1e3, "1 C/kg = 2997924.58 statC/g"},
    {"electric potential", dims::electric_potential, "statV", "V", 299.792458,
     1.0 / 299.792458, "1 statV = 299.792458 V"},
    {"electric field", dims::electric_field, "statV/cm", "V/m", 29979.2458, 1.0 / 29979.2458,
     "1 statV/cm = 29979.2458 V/m"},
    {"magnetic moment", dims::magnetic_moment, "G*cm^3", "A*m^2", 1e-3, 1e3,
     "1 erg/G = 1e-3 J/T"},
    {"coupling (energy x length)", dims::coupling, "erg*cm", "J*m", 1e-9, 1e9, "exact"},
    {"action", dims::action, "erg*s", "J*s", 1e-7, 1e7, "exact"},
    {"gravitational constant", dims::gravitational, "cm^3/(g*s^2)", "m^3/(kg*s^2)", 1e-3, 1e3,
     "exact"},
    {"charge per mass squared", dims::charge_per_mass * dims::charge_per_mass, "(statC/g)^2",
     "(C/kg)^2", (1e3 / kStatCPerCoulomb) * (1e3 / kStatCPerCoulomb),
     (kStatCPerCoulomb / 1e3) * (kStatCPerCoulomb / 1e3), "same Gaussian dimension as the gravitational constant"},
}};
}  // namespace

std::span<const SiConversion> si_conversion_table() { return kTable; }

const SiConversion& si_conversion_for(Dimension dim) {
  const SiConversion* found = nullptr;
  for (const auto& row : kTable) {
    if (row.dim != dim) continue;
    if (found != nullptr) {
      throw DimensionError("ambiguous SI conversion for dimension [" + dim.to_string() + "]: '" +
                           std::string(found->kind) + "' or '" + std::string(row.kind) + "'");
    }
    found = &row;
  }
  if (found == nullptr) throw DimensionError("no SI conversion for dimension [" + dim.to_string() + "]");
  return *found;
}

const SiConversion& si_conversion_for_kind(std::string_view kind) {
  for (const auto& row : kTable) {
    if (row.kind == kind) return row;
  }
  throw DimensionError("no SI conversion named '" + std::string(kind) + "'");
}

namespace {
SiValue apply(const SiConversion& row, const Quantity& a) {
  a.require(row.dim, row.kind);
  return {require_finite(a.value() * row.si_per_gaussian, "to_si"), std::string(row.si_unit)};
}
}  // namespace

SiValue to_si(const Quantity& a) { return apply(si_conversion_for(a.dim()), a); }

SiValue to_si(const Quantity& a, std::string_view kind) {
  return apply(si_conversion_for_kind(kind), a);
}

Quantity from_si(double value, Dimension dim) {
  const auto& row = si_conversion_for(dim);
  return {value * row.gaussian_per_si, dim};
}

Quantity from_si(double value, std::string_view si_unit) {
  for (const auto& row : kTable) {
    if (row.si_unit == si_unit) return {value * row.gaussian_per_si, row.dim};
  }
  throw DimensionError("unsupported SI unit '" + std::string(si_unit) + "'");
}

std::string conversion_table_markdown() {
  std::ostringstream os;
  os << "| kind | dimension (g, cm, s) | Gaussian unit | SI unit | 1 Gaussian in SI | 1 SI in Gaussian | note |\n";
  os << "|---|---|---|---|---|---|---|\n";
  for (const auto& row : kTable) {
    os << "| " << row.kind << " | " << row.dim.to_string() << " | " << row.gaussian_unit << " | "
       << row.si_unit << " | " << format_g(row.si_per_gaussian, 12) << " | "
       << format_g(row.gaussian_per_si, 12) << " | " << row.note << " |\n";
  }
  return os.str();
}

}  // namespace thetamix
