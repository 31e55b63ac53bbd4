#ifndef STATFAN_MONOMIAL_HPP
#define STATFAN_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace statfan {

/// A monomial as a dense exponent vector of fixed length r. Design problems
/// are low-dimensional, so no sparse representation.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial constant(std::size_t arity);
  static Monomial unit(std::size_t arity, std::size_t index);

  std::size_t arity() const { return exponents_.size(); }
  int operator[](std::size_t j) const { return exponents_[j]; }
  const std::vector<int>& exponents() const { return exponents_; }

  /// Total degree d(alpha) = sum of exponents.
  int degree() const;

  bool is_constant() const;

  /// Componentwise product (exponent sum).
  Monomial operator*(const Monomial& other) const;

  /// Exact quotient, or nullopt when `other` does not divide this.
  std::optional<Monomial> divided_by(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<int> exponents_;
};

/// True iff b is a constituent of a, i.e. b_j <= a_j for all j.
bool is_constituent(const Monomial& b, const Monomial& a);

/// All constituents of a, canonically sorted; cardinality prod(a_j + 1).
std::vector<Monomial> constituents(const Monomial& a);

/// All monomials of total degree d in r indeterminates, canonically sorted.
/// Count is (d+r-1)! / (d! (r-1)!).
std::vector<Monomial> monomials_of_degree(std::size_t r, int d);

/// True iff the set is closed under constituency (an order ideal).
bool is_staircase(std::span<const Monomial> monomials);

enum class OrderKind { lex, grlex, grevlex };

const char* to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

/// A monomial ordering: one of the three named kinds combined with a
/// permutation of the indeterminate indices that is applied before the
/// kind-specific comparison. permutation[0] names the most significant
/// indeterminate.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t arity);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation);

  OrderKind kind() const { return kind_; }
  std::size_t arity() const { return permutation_.size(); }
  const std::vector<std::size_t>& permutation() const { return permutation_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  bool operator==(const MonomialOrder& other) const = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> permutation_;
};

/// The fixed order used for canonical model storage and deterministic output:
/// ascending grevlex with the identity permutation.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Product form: "x1^2*x3"; the constant monomial prints as "1".
std::string to_string(const Monomial& m);

/// Tuple form: "(2,0,1)".
std::string tuple_string(const Monomial& m);

/// Accepts both the product form and the tuple form.
Monomial parse_monomial(std::string_view text, std::size_t arity);

}  // namespace statfan

#endif
