#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "sheaf1d/rational.hpp"

namespace sheaf1d {

struct Endpoint {
  enum class Kind { NegInf, Finite, PosInf };

  Kind kind = Kind::Finite;
  Rational value;
  bool closed = false;

  static Endpoint neg_inf() { return {Kind::NegInf, Rational(0), false}; }
  static Endpoint pos_inf() { return {Kind::PosInf, Rational(0), false}; }
  static Endpoint at(const Rational& v, bool closed) { return {Kind::Finite, v, closed}; }

  bool is_finite() const { return kind == Kind::Finite; }

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// -1, 0, 1 comparing the extended values only.
int compare_values(const Endpoint& a, const Endpoint& b);

// An interval of the extended rational line with open/closed ends.
class Interval {
 public:
  // Validates; throws MalformedInput when the interval would be empty or
  // an infinite end is flagged closed.
  static Interval make(const Endpoint& left, const Endpoint& right);
  static std::optional<Interval> try_make(const Endpoint& left, const Endpoint& right);

  static Interval closed(const Rational& a, const Rational& b) { return make(Endpoint::at(a, true), Endpoint::at(b, true)); }
  static Interval open(const Rational& a, const Rational& b) { return make(Endpoint::at(a, false), Endpoint::at(b, false)); }
  static Interval closed_open(const Rational& a, const Rational& b) { return make(Endpoint::at(a, true), Endpoint::at(b, false)); }
  static Interval open_closed(const Rational& a, const Rational& b) { return make(Endpoint::at(a, false), Endpoint::at(b, true)); }
  static Interval point(const Rational& a) { return closed(a, a); }
  static Interval real_line() { return make(Endpoint::neg_inf(), Endpoint::pos_inf()); }
  static Interval from(const Rational& a, bool closed) { return make(Endpoint::at(a, closed), Endpoint::pos_inf()); }
  static Interval until(const Rational& b, bool closed) { return make(Endpoint::neg_inf(), Endpoint::at(b, closed)); }

  const Endpoint& left() const { return left_; }
  const Endpoint& right() const { return right_; }

  bool contains(const Rational& x) const;
  bool bounded_below() const { return left_.is_finite(); }
  bool bounded_above() const { return right_.is_finite(); }
  bool is_bounded() const { return bounded_below() && bounded_above(); }
  bool is_singleton() const;
  // Closed in R: every finite end is closed.
  bool is_closed() const;
  // Open in R: every finite end is open.
  bool is_open() const;
  std::optional<Rational> length() const;

  Interval translate(const Rational& c) const;
  Interval closure() const;
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

 private:
  Interval(const Endpoint& l, const Endpoint& r) : left_(l), right_(r) {}
  Endpoint left_;
  Endpoint right_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Parses text such as "[0,1)", "(-inf,2]" or "(1/2,inf)".
Interval parse_interval(std::string_view text);

// True when a ⊆ b.
bool is_subset(const Interval& a, const Interval& b);

}  // namespace sheaf1d
