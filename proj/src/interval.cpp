#include "sheaf1d/interval.hpp"

#include "sheaf1d/errors.hpp"

namespace sheaf1d {
namespace {

int kind_rank(Endpoint::Kind k) {
  switch (k) {
    case Endpoint::Kind::NegInf: return 0;
    case Endpoint::Kind::Finite: return 1;
    case Endpoint::Kind::PosInf: return 2;
  }
  return 1;
}

std::strong_ordering order_of(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string endpoint_text(const Endpoint& e) {
  if (e.kind == Endpoint::Kind::NegInf) return "-inf";
  if (e.kind == Endpoint::Kind::PosInf) return "inf";
  return format_rational(e.value);
}

}  // namespace

int compare_values(const Endpoint& a, const Endpoint& b) {
  int ka = kind_rank(a.kind), kb = kind_rank(b.kind);
  if (ka != kb) return ka < kb ? -1 : 1;
  if (!a.is_finite()) return 0;
  if (a.value < b.value) return -1;
  if (a.value > b.value) return 1;
  return 0;
}

std::optional<Interval> Interval::try_make(const Endpoint& left, const Endpoint& right) {
  if (left.kind == Endpoint::Kind::PosInf || right.kind == Endpoint::Kind::NegInf) return std::nullopt;
  if ((!left.is_finite() && left.closed) || (!right.is_finite() && right.closed)) return std::nullopt;
  int c = compare_values(left, right);
  if (c > 0) return std::nullopt;
  if (c == 0 && !(left.closed && right.closed)) return std::nullopt;
  return Interval(left, right);
}

Interval Interval::make(const Endpoint& left, const Endpoint& right) {
  auto i = try_make(left, right);
  if (!i) {
    Interval bad(left, right);
    throw MalformedInput("invalid interval " + bad.to_string());
  }
  return *i;
}

bool Interval::contains(const Rational& x) const {
  if (left_.is_finite()) {
    if (x < left_.value || (x == left_.value && !left_.closed)) return false;
  }
  if (right_.is_finite()) {
    if (x > right_.value || (x == right_.value && !right_.closed)) return false;
  }
  return true;
}

bool Interval::is_singleton() const {
  return left_.is_finite() && right_.is_finite() && left_.value == right_.value;
}

bool Interval::is_closed() const {
  return (!left_.is_finite() || left_.closed) && (!right_.is_finite() || right_.closed);
}

bool Interval::is_open() const {
  return (!left_.is_finite() || !left_.closed) && (!right_.is_finite() || !right_.closed);
}

std::optional<Rational> Interval::length() const {
  if (!is_bounded()) return std::nullopt;
  return right_.value - left_.value;
}

Interval Interval::translate(const Rational& c) const {
  Endpoint l = left_, r = right_;
  if (l.is_finite()) l.value += c;
  if (r.is_finite()) r.value += c;
  return Interval(l, r);
}

Interval Interval::closure() const {
  Endpoint l = left_, r = right_;
  if (l.is_finite()) l.closed = true;
  if (r.is_finite()) r.closed = true;
  return Interval(l, r);
}

std::string Interval::to_string() const {
  std::string s;
  s += left_.closed ? '[' : '(';
  s += endpoint_text(left_);
  s += ',';
  s += endpoint_text(right_);
  s += right_.closed ? ']' : ')';
  return s;
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
  if (int c = compare_values(a.left_, b.left_)) return order_of(c);
  // A closed left end starts earlier than an open one.
  if (a.left_.closed != b.left_.closed) return a.left_.closed ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int c = compare_values(a.right_, b.right_)) return order_of(c);
  // An open right end finishes earlier than a closed one.
  if (a.right_.closed != b.right_.closed) return a.right_.closed ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Endpoint l = a.left();
  int cl = compare_values(a.left(), b.left());
  if (cl < 0 || (cl == 0 && l.closed && !b.left().closed)) l = b.left();
  Endpoint r = a.right();
  int cr = compare_values(a.right(), b.right());
  if (cr > 0 || (cr == 0 && r.closed && !b.right().closed)) r = b.right();
  return Interval::try_make(l, r);
}

Interval parse_interval(std::string_view text) {
  auto fail = [&]() { return MalformedInput("bad interval literal: '" + std::string(text) + "'"); };
  if (text.size() < 5) throw fail();
  char open_c = text.front(), close_c = text.back();
  if ((open_c != '[' && open_c != '(') || (close_c != ']' && close_c != ')')) throw fail();
  auto body = text.substr(1, text.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw fail();
  auto end = [&](std::string_view t, bool closed) {
    bool infinite = t == "-inf" || t == "inf" || t == "+inf";
    if (infinite && closed) throw fail();
    if (t == "-inf") return Endpoint::neg_inf();
    if (infinite) return Endpoint::pos_inf();
    return Endpoint::at(parse_rational(t), closed);
  };
  return Interval::make(end(body.substr(0, comma), open_c == '['), end(body.substr(comma + 1), close_c == ']'));
}

bool is_subset(const Interval& a, const Interval& b) {
  auto i = intersect(a, b);
  return i && *i == a;
}

}  // namespace sheaf1d
