#include "statfan/rational.hpp"

#include <cctype>

#include "statfan/errors.hpp"

namespace statfan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer integer_from(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
    if (s.empty()) throw ParseError("sign without digits in rational literal");
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction: '" + std::string(text) + "'");
    Integer d = integer_from(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    value = Rational(integer_from(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer numerator = whole.empty() ? Integer(0) : integer_from(whole);
    numerator *= scale;
    if (!frac.empty()) numerator += integer_from(frac);
    value = Rational(numerator, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    value = Rational(integer_from(s));
  }

  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (q.get_num() == 0) return q.get_den() == 1;
  return g == 1;
}

}  // namespace statfan
