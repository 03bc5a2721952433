#include "acyclic/scalar.hpp"

#include <cctype>
#include <ostream>

#include "acyclic/errors.hpp"

namespace acyclic {
namespace {

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed 64-bit values; a != 0 and p prime.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) {
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(text), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Scalar Scalar::zero(FieldSpec field) {
  if (field.is_rational()) return Scalar(mpq_class(0));
  return Scalar(field, 0u);
}

Scalar Scalar::one(FieldSpec field) {
  if (field.is_rational()) return Scalar(mpq_class(1));
  return Scalar(field, 1u);
}

Scalar Scalar::from_int(FieldSpec field, long long value) {
  if (field.is_rational()) {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
    return Scalar(mpq_class(z));
  }
  long long r = value % static_cast<long long>(field.modulus());
  if (r < 0) r += field.modulus();
  return Scalar(field, static_cast<std::uint32_t>(r));
}

Scalar Scalar::from_fraction(FieldSpec field, const mpz_class& num, const mpz_class& den) {
  if (field.is_rational()) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint32_t p = field.modulus();
  const std::uint32_t d = reduce_mod(den, p);
  if (d == 0) throw DivisionByZero();
  const std::uint64_t n = reduce_mod(num, p);
  return Scalar(field, static_cast<std::uint32_t>(n * inverse_mod(d, p) % p));
}

Scalar Scalar::from_rational(const mpq_class& q) {
  mpq_class copy(q);
  copy.canonicalize();
  return Scalar(std::move(copy));
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  if (field.is_rational()) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Scalar(mpq_class(parse_integer(text, text)));
    }
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw ParseError("malformed denominator in '" + std::string(text) + "'");
    }
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return from_fraction(field, num, den);
  }
  return Scalar(field, reduce_mod(parse_integer(text, text), field.modulus()));
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw FieldMismatch("scalar is not a prime-field residue");
  return std::get<std::uint32_t>(value_);
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t s = std::uint64_t{*r} + std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t s = std::uint64_t{*r} + p - std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(s % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t s = std::uint64_t{*r} * std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(s % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  return *this *= other.inverse();
}

Scalar& Scalar::sub_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t prod =
        std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_) % p;
    *r = static_cast<std::uint32_t>((std::uint64_t{*r} + p - prod) % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    return Scalar(field_, *r == 0 ? 0u : field_.modulus() - *r);
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto r = std::get_if<std::uint32_t>(&value_)) {
    return Scalar(field_, inverse_mod(*r, field_.modulus()));
  }
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  inv.canonicalize();
  return Scalar(std::move(inv));
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace acyclic
