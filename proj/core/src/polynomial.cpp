#include "statfan/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "statfan/errors.hpp"

namespace statfan {

Polynomial Polynomial::from_terms(MonomialOrder order, std::vector<Term> terms) {
  std::map<std::vector<int>, Rational> combined;
  for (Term& t : terms) {
    if (t.monomial.arity() != order.arity())
      throw std::invalid_argument("term arity does not match polynomial order");
    if (t.coeff == 0) continue;
    combined[t.monomial.exponents()] += t.coeff;
  }
  Polynomial out(std::move(order));
  for (auto& [exps, coeff] : combined) {
    if (coeff == 0) continue;
    out.terms_.push_back(Term{coeff, Monomial(exps)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), [&out](const Term& a, const Term& b) {
    return out.order_.less(b.monomial, a.monomial);  // descending
  });
  return out;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(order_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Term> all = terms_;
  for (const Term& t : other.terms_) all.push_back(Term{-t.coeff, t.monomial});
  return from_terms(order_, std::move(all));
}

Polynomial Polynomial::operator-() const {
  Polynomial out(order_);
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::times(const Term& t) const {
  Polynomial out(order_);
  if (t.coeff == 0) return out;
  out.terms_.reserve(terms_.size());
  // Translation invariance of monomial orderings keeps the terms sorted.
  for (const Term& own : terms_)
    out.terms_.push_back(Term{own.coeff * t.coeff, own.monomial * t.monomial});
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out(order_);
  out.terms_ = terms_;
  const Rational lead = terms_.front().coeff;
  for (Term& t : out.terms_) t.coeff /= lead;
  return out;
}

Polynomial Polynomial::reordered(MonomialOrder new_order) const {
  std::vector<Term> copy = terms_;
  return from_terms(std::move(new_order), std::move(copy));
}

bool Polynomial::equals(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  std::map<std::vector<int>, Rational> mine;
  for (const Term& t : terms_) mine[t.monomial.exponents()] = t.coeff;
  for (const Term& t : other.terms_) {
    auto it = mine.find(t.monomial.exponents());
    if (it == mine.end() || it->second != t.coeff) return false;
  }
  return true;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.arity())
    throw std::invalid_argument("point length does not match polynomial arity");
  Rational sum(0);
  for (const Term& t : f.terms()) {
    Rational value = t.coeff;
    for (std::size_t j = 0; j < point.size(); ++j)
      for (int e = 0; e < t.monomial[j]; ++e) value *= point[j];
    sum += value;
  }
  return sum;
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const Polynomial& d : divisors) {
    if (!(d.order() == f.order()))
      throw std::invalid_argument("division requires a shared monomial order");
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  }
  DivisionResult out{std::vector<Polynomial>(divisors.size(), Polynomial(f.order())),
                     Polynomial(f.order())};
  Polynomial p = f;
  std::vector<Term> remainder_terms;
  while (!p.is_zero()) {
    bool divided = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      auto quotient_mono = p.leading_monomial().divided_by(divisors[i].leading_monomial());
      if (!quotient_mono) continue;
      Term t{p.leading_term().coeff / divisors[i].leading_term().coeff, *quotient_mono};
      out.quotients[i] = out.quotients[i] + Polynomial::from_terms(f.order(), {t});
      p = p - divisors[i].times(t);
      divided = true;
      break;
    }
    if (!divided) {
      remainder_terms.push_back(p.leading_term());
      p = p - Polynomial::from_terms(f.order(), {p.leading_term()});
    }
  }
  out.remainder = Polynomial::from_terms(f.order(), std::move(remainder_terms));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!(f.order() == g.order()))
    throw std::invalid_argument("S-polynomial requires a shared monomial order");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Term tf{Rational(1) / f.leading_term().coeff, *l.divided_by(f.leading_monomial())};
  Term tg{Rational(1) / g.leading_term().coeff, *l.divided_by(g.leading_monomial())};
  return f.times(tf) - g.times(tg);
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Term parse_term(std::string_view text, std::size_t arity) {
  Term out{Rational(1), Monomial::constant(arity)};
  std::size_t start = 0;
  std::string s(text);
  bool saw_factor = false;
  while (start <= s.size()) {
    std::size_t star = s.find('*', start);
    std::string_view factor = trim_view(
        star == std::string::npos ? std::string_view(s).substr(start)
                                  : std::string_view(s).substr(start, star - start));
    if (factor.empty()) throw ParseError("empty factor in polynomial term");
    if (factor.front() == 'x' || factor.front() == 'X') {
      out.monomial = out.monomial * parse_monomial(factor, arity);
    } else {
      out.coeff *= parse_rational(factor);
    }
    saw_factor = true;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  if (!saw_factor) throw ParseError("empty polynomial term");
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, MonomialOrder order) {
  std::string_view s = trim_view(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool negative = false;
  // Leading sign.
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    pos = 1;
  }
  std::size_t term_start = pos;
  auto flush = [&](std::size_t end) {
    std::string_view piece = trim_view(s.substr(term_start, end - term_start));
    if (piece.empty()) throw ParseError("empty term in polynomial: '" + std::string(text) + "'");
    Term t = parse_term(piece, order.arity());
    if (negative) t.coeff = -t.coeff;
    terms.push_back(std::move(t));
  };
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') {
      flush(i);
      negative = s[i] == '-';
      term_start = i + 1;
    }
  }
  flush(s.size());
  return Polynomial::from_terms(std::move(order), std::move(terms));
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out << '-';
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.monomial.is_constant()) {
      out << to_string(c);
    } else {
      if (c != 1) out << to_string(c) << '*';
      out << to_string(t.monomial);
    }
    first = false;
  }
  return out.str();
}

}  // namespace statfan
