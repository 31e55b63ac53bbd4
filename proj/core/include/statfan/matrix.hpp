#ifndef STATFAN_MATRIX_HPP
#define STATFAN_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "statfan/rational.hpp"

namespace statfan {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_columns(const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::vector<Rational> column(std::size_t j) const;
  std::vector<Rational> row(std::size_t i) const;
  Matrix transposed() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact rank over the rationals via fraction-free (Bareiss) elimination on
/// the denominator-cleared integer matrix. Pivot = first nonzero in column
/// scan order, so results are deterministic.
std::size_t rank(const Matrix& m);

/// Incremental elimination state over a fixed number of rows. Columns are
/// pushed one at a time; dependent columns report their exact span
/// coefficients, independent ones extend the state. pop() unwinds the most
/// recent accepted column, which lets fan enumeration explore candidate
/// columns depth-first without re-eliminating.
class Eliminator {
 public:
  explicit Eliminator(std::size_t rows) : rows_(rows) {}

  /// If v is in the span of the accepted columns, returns coefficients c with
  /// accepted * c = v and leaves the state unchanged. Otherwise accepts v and
  /// returns nullopt.
  std::optional<std::vector<Rational>> push(std::span<const Rational> v);

  /// True iff v extends the accepted set (v was accepted).
  bool try_push(std::span<const Rational> v) { return !push(v).has_value(); }

  /// Non-mutating membership test.
  std::optional<std::vector<Rational>> span_coefficients(std::span<const Rational> v) const;

  bool in_span(std::span<const Rational> v) const;

  /// Removes the most recently accepted column.
  void pop();

  std::size_t rank() const { return stages_.size(); }
  std::size_t rows() const { return rows_; }

 private:
  struct Stage {
    std::vector<Rational> reduced;  // residual column, zero at earlier pivots
    std::size_t pivot;              // first nonzero row of `reduced`
    std::vector<Rational> combo;    // reduced = sum combo[i] * accepted column i
  };

  struct Reduction {
    std::vector<Rational> residual;
    std::vector<Rational> factors;  // one per stage
  };
  Reduction reduce(std::span<const Rational> v) const;

  std::size_t rows_;
  std::vector<Stage> stages_;
};

/// True iff appending v as a column increases the rank of `basis` by one.
bool extends_independent(const Matrix& basis, std::span<const Rational> v);

/// Coefficients c with basis * c = v, exact, or nullopt if v is outside the
/// column span.
std::optional<std::vector<Rational>> in_span_coefficients(const Matrix& basis,
                                                          std::span<const Rational> v);

}  // namespace statfan

#endif
