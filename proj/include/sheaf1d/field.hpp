#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "sheaf1d/rational.hpp"

namespace sheaf1d {

// Runtime description of the coefficient field.
class FieldSpec {
 public:
  enum class Kind { Prime, Rational };

  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals() { return FieldSpec(Kind::Rational, 0); }

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t(a) * b) % p_);
  }
  value_type inv(value_type a) const;
  value_type from_rational(const Rational& r) const;
  value_type from_int(std::int64_t v) const;
  Rational to_rational(value_type a) const { return Rational(a); }
  std::uint32_t characteristic() const { return p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type from_rational(const Rational& r) const { return r; }
  value_type from_int(std::int64_t v) const { return Rational(v); }
  Rational to_rational(const value_type& a) const { return a; }
  std::uint32_t characteristic() const { return 0; }
};

// Calls fn with the concrete field object described by spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_prime()) return std::forward<Fn>(fn)(PrimeField(spec.characteristic()));
  return std::forward<Fn>(fn)(RationalField());
}

// Throws FieldMismatch when the two specs differ.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

}  // namespace sheaf1d
