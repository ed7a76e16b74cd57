#pragma once

// Dimension-checked quantities over the Gaussian-CGS base (g, cm, s).
//
// Every physical value in the library is a Quantity. Exponents are rational
// because charge (statcoulomb = g^1/2 cm^3/2 s^-1) and everything built from
// it carries half-integer powers. SI only appears at the I/O boundary through
// to_si / from_si.

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>

#include "thetamix/error.hpp"

namespace thetamix {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_integer() const { return den_ == 1; }
  constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a) { return {-a.num_, a.den_}; }
  friend constexpr Rational operator-(Rational a, Rational b) { return a + (-b); }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr bool operator==(Rational a, Rational b) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exponents of gram, centimeter and second.
class Dimension {
 public:
  constexpr Dimension() = default;
  constexpr Dimension(Rational g, Rational cm, Rational s) : g_(g), cm_(cm), s_(s) {}

  constexpr Rational g() const { return g_; }
  constexpr Rational cm() const { return cm_; }
  constexpr Rational s() const { return s_; }
  constexpr bool is_dimensionless() const { return g_.is_zero() && cm_.is_zero() && s_.is_zero(); }

  friend constexpr Dimension operator*(Dimension a, Dimension b) {
    return {a.g_ + b.g_, a.cm_ + b.cm_, a.s_ + b.s_};
  }
  friend constexpr Dimension operator/(Dimension a, Dimension b) {
    return {a.g_ - b.g_, a.cm_ - b.cm_, a.s_ - b.s_};
  }
  constexpr Dimension inverse() const { return {-g_, -cm_, -s_}; }
  constexpr Dimension pow(Rational p) const { return {g_ * p, cm_ * p, s_ * p}; }
  friend constexpr bool operator==(Dimension a, Dimension b) = default;

  /// "g^1/2 cm^3/2 s^-1"; "1" for dimensionless.
  std::string to_string() const;

 private:
  Rational g_;
  Rational cm_;
  Rational s_;
};

namespace dims {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension mass{1, 0, 0};
inline constexpr Dimension length{0, 1, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension velocity = length / time;
inline constexpr Dimension energy = mass * length * length / (time * time);
inline constexpr Dimension force = energy / length;
inline constexpr Dimension action = energy * time;
inline constexpr Dimension charge{Rational{1, 2}, Rational{3, 2}, -1};
inline constexpr Dimension charge_per_mass = charge / mass;
inline constexpr Dimension electric_potential = charge / length;
inline constexpr Dimension electric_field = charge / (length * length);
inline constexpr Dimension magnetic_moment = charge * length;
inline constexpr Dimension coupling = energy * length;
/// Newton constant k: cm^3 g^-1 s^-2.
inline constexpr Dimension gravitational = length * length * length / (mass * time * time);
inline constexpr Dimension frequency = time.inverse();
}  // namespace dims

class Quantity {
 public:
  Quantity() = default;
  Quantity(double value, Dimension dim);

  static Quantity dimensionless(double value) { return {value, dims::dimensionless}; }

  double value() const { return value_; }
  Dimension dim() const { return dim_; }

  /// Returns value() after asserting the dimension; throws DimensionError otherwise.
  double in(Dimension expected) const;
  void require(Dimension expected, std::string_view what) const;

  friend Quantity operator*(const Quantity& a, const Quantity& b);
  friend Quantity operator/(const Quantity& a, const Quantity& b);
  friend Quantity operator+(const Quantity& a, const Quantity& b);
  friend Quantity operator-(const Quantity& a, const Quantity& b);
  friend Quantity operator-(const Quantity& a);
  friend Quantity operator*(double s, const Quantity& a);
  friend Quantity operator*(const Quantity& a, double s) { return s * a; }
  friend Quantity operator/(const Quantity& a, double s);

  /// Ordering requires equal dimensions.
  friend bool operator<(const Quantity& a, const Quantity& b);
  friend bool operator==(const Quantity& a, const Quantity& b) = default;

  std::string to_string() const;

 private:
  double value_ = 0.0;
  Dimension dim_;
};

Quantity qty_mul(const Quantity& a, const Quantity& b);
Quantity qty_add(const Quantity& a, const Quantity& b);
/// a^p. Negative base with a fractional exponent is a DomainError.
Quantity qty_pow(const Quantity& a, Rational p);
Quantity qty_sqrt(const Quantity& a);
Quantity abs(const Quantity& a);

/// Throws "non-finite result" unless x is finite.
double require_finite(double x, std::string_view context = {});

// ---------------------------------------------------------------------------
// SI boundary

struct SiConversion {
  std::string_view kind;
  Dimension dim;
  std::string_view gaussian_unit;
  std::string_view si_unit;
  /// 1 Gaussian unit expressed in SI units.
  double si_per_gaussian;
  /// 1 SI unit expressed in Gaussian units.
  double gaussian_per_si;
  std::string_view note;
};

std::span<const SiConversion> si_conversion_table();
/// Throws DimensionError when no row, or more than one row, has this
/// dimension. Gaussian CGS folds some distinct SI quantities together
/// (kappa and the Newton constant are both g^-1 cm^3 s^-2); those need the
/// kind-based lookup.
const SiConversion& si_conversion_for(Dimension dim);
const SiConversion& si_conversion_for_kind(std::string_view kind);

struct SiValue {
  double value;
  std::string unit;
};

SiValue to_si(const Quantity& a);
/// Conversion through a named row; the quantity's dimension must match it.
SiValue to_si(const Quantity& a, std::string_view kind);
Quantity from_si(double value, Dimension dim);
/// Looks the dimension up by SI unit string ("kg", "C", "V/m", ...).
Quantity from_si(double value, std::string_view si_unit);

/// Markdown rendering of si_conversion_table(), as shipped in docs/units.md.
std::string conversion_table_markdown();

}  // namespace thetamix
