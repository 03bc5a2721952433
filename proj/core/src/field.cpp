#include "acyclic/field.hpp"

#include <charconv>
#include <limits>

#include "acyclic/errors.hpp"

namespace acyclic {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidField("prime field modulus must be below 2^32, got " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw InvalidField("prime field modulus is not prime: " + std::to_string(p));
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  constexpr std::string_view prefix = "fp:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InvalidField("malformed prime field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InvalidField("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("q") : "fp:" + std::to_string(modulus_);
}

}  // namespace acyclic
