#ifndef STATFAN_POLYNOMIAL_HPP
#define STATFAN_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "statfan/monomial.hpp"
#include "statfan/rational.hpp"

namespace statfan {

struct Term {
  Rational coeff;
  Monomial monomial;
};

/// A multivariate polynomial over exact rationals, terms stored strictly
/// decreasing under a bound monomial ordering. The leading term is the first
/// entry; no zero coefficients are kept.
class Polynomial {
 public:
  explicit Polynomial(MonomialOrder order) : order_(std::move(order)) {}

  /// Combines like monomials, drops zero coefficients, sorts descending.
  static Polynomial from_terms(MonomialOrder order, std::vector<Term> terms);

  const MonomialOrder& order() const { return order_; }
  std::size_t arity() const { return order_.arity(); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial times(const Term& t) const;
  Polynomial monic() const;

  /// Same terms re-sorted under a different ordering.
  Polynomial reordered(MonomialOrder new_order) const;

  /// Order-independent equality on the term set.
  bool equals(const Polynomial& other) const;

 private:
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Exact evaluation at a point.
Rational evaluate(const Polynomial& f, std::span<const Rational> point);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum q_i d_i + remainder, with no remainder
/// monomial divisible by any divisor's leading monomial.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// "x1*x2 - x2*x4 + x1 - x4", coefficients as integers/decimals/fractions.
Polynomial parse_polynomial(std::string_view text, MonomialOrder order);

std::string to_string(const Polynomial& f);

}  // namespace statfan

#endif
