#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace quivalg {

/// An exact field element: either a GMP rational in lowest terms, or a
/// residue in [0, p) of a prime field F_p. Arithmetic never rounds.
///
/// Scalars of different fields never mix; doing so throws FieldMismatch.
/// A default-constructed Scalar is the rational zero.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class q);

  static Scalar residue(std::uint64_t value, std::uint64_t modulus);

  /// 0 for rationals, p for F_p.
  std::uint64_t modulus() const noexcept;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Compact form: "3", "-2/5", or the residue in decimal.
  std::string str() const;
  /// Report form: always "num/den" for rationals, decimal residue for F_p.
  std::string report_str() const;

  /// Rational value; only valid when modulus() == 0.
  const mpq_class& rational() const;
  /// Residue value; only valid when modulus() != 0.
  std::uint64_t residue_value() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Descriptor of the ground field: Q (characteristic 0) or F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidField unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);
  /// Accepts "rat" or "fp:<p>".
  static Field parse(std::string_view text);

  std::uint64_t characteristic() const noexcept { return characteristic_; }
  bool is_rational() const noexcept { return characteristic_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  /// Throws InvalidField when the denominator vanishes in the field.
  Scalar from_rational(const mpq_class& q) const;
  /// Parses "n", "-n", "n/d". Throws InputError on malformed text.
  Scalar parse_scalar(std::string_view text) const;

  bool contains(const Scalar& s) const noexcept { return s.modulus() == characteristic_; }

  /// "rat" or "fp:<p>"; round-trips through parse().
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.characteristic_ == b.characteristic_; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::uint64_t p) : characteristic_(p) {}

  std::uint64_t characteristic_;
};

/// Parses an exact rational literal ("n", "-n", "n/d", d != 0).
mpq_class parse_rational(std::string_view text);

}  // namespace quivalg
