#include "sheaf1d/field.hpp"

#include "sheaf1d/errors.hpp"

namespace sheaf1d {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > (std::uint64_t(1) << 31) || !is_prime_number(p))
    throw MalformedInput("field characteristic must be a prime <= 2^31, got " + std::to_string(p));
  return FieldSpec(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_prime() ? "F" + std::to_string(p_) : "Q";
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::from_rational(const Rational& r) const {
  Integer num = numerator_of(r) % p_;
  Integer den = denominator_of(r) % p_;
  if (num < 0) num += p_;
  if (den == 0) throw MalformedInput("denominator divisible by the characteristic");
  return mul(static_cast<value_type>(num.convert_to<std::uint64_t>()),
             inv(static_cast<value_type>(den.convert_to<std::uint64_t>())));
}

PrimeField::value_type PrimeField::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<value_type>(m);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace sheaf1d
