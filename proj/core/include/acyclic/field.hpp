#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace acyclic {

enum class FieldKind { Rationals, PrimeField };

/// The ground field of a computation: Q, or F_p for a prime p < 2^32.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// Throws InvalidField unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static FieldSpec parse(std::string_view text);

  constexpr FieldKind kind() const {
    return modulus_ == 0 ? FieldKind::Rationals : FieldKind::PrimeField;
  }
  constexpr bool is_rational() const { return modulus_ == 0; }
  /// The characteristic; 0 for Q.
  constexpr std::uint32_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

 private:
  constexpr explicit FieldSpec(std::uint32_t p) : modulus_(p) {}

  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace acyclic
