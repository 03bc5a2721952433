#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "acyclic/field.hpp"

namespace acyclic {

/// An exact field element.  Rationals are kept as reduced fractions with a
/// positive denominator, prime-field elements as residues in [0, p), so
/// equality is structural.  Arithmetic between different fields throws
/// FieldMismatch.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar from_int(FieldSpec field, long long value);
  /// num/den reduced into the field; throws DivisionByZero if den maps to 0.
  static Scalar from_fraction(FieldSpec field, const mpz_class& num, const mpz_class& den);
  static Scalar from_rational(const mpq_class& q);
  /// Rationals: "a" or "a/b" with optional sign and b > 0.  Prime fields:
  /// a decimal integer, reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only for rational scalars.
  const mpq_class& rational() const;
  /// Valid only for prime-field scalars.
  std::uint32_t residue() const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  /// *this -= a * b
  Scalar& sub_product(const Scalar& a, const Scalar& b);

  Scalar operator-() const;
  /// Throws DivisionByZero on zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(FieldSpec field, std::uint32_t residue) : field_(field), value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Named forms of the field operations.
inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

}  // namespace acyclic
