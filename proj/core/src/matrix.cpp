#include "statfan/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace statfan {

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged row in matrix");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
  Matrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw std::invalid_argument("ragged column in matrix");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Rational> Matrix::column(std::size_t j) const {
  if (j >= cols_) throw std::invalid_argument("column index out of range");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  if (i >= rows_) throw std::invalid_argument("row index out of range");
  std::vector<Rational> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t rank(const Matrix& m) {
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  if (n_rows == 0 || n_cols == 0) return 0;

  // Clear denominators row by row; row scaling by a positive integer keeps
  // the rank, and integer entries make the Bareiss divisions exact.
  std::vector<std::vector<Integer>> a(n_rows, std::vector<Integer>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < n_cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n_cols; ++j) {
      Integer scale = lcm / m(i, j).get_den();
      a[i][j] = m(i, j).get_num() * scale;
    }
  }

  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < n_cols && rk < n_rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < n_rows && a[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(a[rk], a[pivot]);
    const Integer piv = a[rk][col];
    for (std::size_t i = rk + 1; i < n_rows; ++i) {
      for (std::size_t j = col + 1; j < n_cols; ++j) {
        Integer t = piv * a[i][j] - a[i][col] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++rk;
  }
  return rk;
}

Eliminator::Reduction Eliminator::reduce(std::span<const Rational> v) const {
  if (v.size() != rows_) throw std::invalid_argument("column length does not match row count");
  Reduction out;
  out.residual.assign(v.begin(), v.end());
  out.factors.reserve(stages_.size());
  for (const Stage& st : stages_) {
    Rational factor = out.residual[st.pivot] / st.reduced[st.pivot];
    if (factor != 0) {
      for (std::size_t i = 0; i < rows_; ++i)
        if (st.reduced[i] != 0) out.residual[i] -= factor * st.reduced[i];
    }
    out.factors.push_back(std::move(factor));
  }
  return out;
}

std::optional<std::vector<Rational>> Eliminator::span_coefficients(
    std::span<const Rational> v) const {
  Reduction red = reduce(v);
  for (const Rational& x : red.residual)
    if (x != 0) return std::nullopt;
  std::vector<Rational> coeffs(stages_.size());
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    if (red.factors[s] == 0) continue;
    for (std::size_t i = 0; i <= s; ++i)
      coeffs[i] += red.factors[s] * stages_[s].combo[i];
  }
  return coeffs;
}

bool Eliminator::in_span(std::span<const Rational> v) const {
  Reduction red = reduce(v);
  for (const Rational& x : red.residual)
    if (x != 0) return false;
  return true;
}

std::optional<std::vector<Rational>> Eliminator::push(std::span<const Rational> v) {
  Reduction red = reduce(v);
  std::size_t pivot = rows_;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (red.residual[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == rows_) {
    std::vector<Rational> coeffs(stages_.size());
    for (std::size_t s = 0; s < stages_.size(); ++s) {
      if (red.factors[s] == 0) continue;
      for (std::size_t i = 0; i <= s; ++i)
        coeffs[i] += red.factors[s] * stages_[s].combo[i];
    }
    return coeffs;
  }
  Stage st;
  st.reduced = std::move(red.residual);
  st.pivot = pivot;
  st.combo.assign(stages_.size() + 1, Rational(0));
  st.combo.back() = 1;
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    if (red.factors[s] == 0) continue;
    for (std::size_t i = 0; i <= s; ++i)
      st.combo[i] -= red.factors[s] * stages_[s].combo[i];
  }
  stages_.push_back(std::move(st));
  return std::nullopt;
}

void Eliminator::pop() {
  if (stages_.empty()) throw std::logic_error("pop on empty elimination state");
  stages_.pop_back();
}

bool extends_independent(const Matrix& basis, std::span<const Rational> v) {
  if (v.size() != basis.rows()) throw std::invalid_argument("vector length does not match basis rows");
  Eliminator elim(basis.rows());
  for (std::size_t j = 0; j < basis.cols(); ++j) elim.push(basis.column(j));
  return elim.try_push(v);
}

std::optional<std::vector<Rational>> in_span_coefficients(const Matrix& basis,
                                                          std::span<const Rational> v) {
  if (v.size() != basis.rows()) throw std::invalid_argument("vector length does not match basis rows");
  Eliminator elim(basis.rows());
  std::vector<std::size_t> accepted;  // original column index per eliminator stage
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (elim.try_push(basis.column(j))) accepted.push_back(j);
  }
  auto reduced = elim.span_coefficients(v);
  if (!reduced) return std::nullopt;
  std::vector<Rational> coeffs(basis.cols(), Rational(0));
  for (std::size_t s = 0; s < accepted.size(); ++s) coeffs[accepted[s]] = (*reduced)[s];
  return coeffs;
}

}  // namespace statfan
