#include "sheaf1d/rational.hpp"

#include <cctype>

#include "sheaf1d/errors.hpp"

namespace sheaf1d {
namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw MalformedInput("bad rational literal: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw MalformedInput("bad rational literal: '" + std::string(whole) + "'");
  }
  Integer v(std::string(s.substr(i)));
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
    throw MalformedInput("sign in denominator: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw MalformedInput("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  Integer num = numerator_of(r);
  Integer den = denominator_of(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational floor_of(const Rational& r) {
  Integer num = numerator_of(r);
  Integer den = denominator_of(r);
  Integer q;
  mpz_fdiv_q(q.backend().data(), num.backend().data(), den.backend().data());
  return Rational(q);
}

}  // namespace sheaf1d
