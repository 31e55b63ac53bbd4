#ifndef STATFAN_DESIGN_HPP
#define STATFAN_DESIGN_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "statfan/matrix.hpp"
#include "statfan/model.hpp"
#include "statfan/monomial.hpp"

namespace statfan {

/// A design: n > 1 distinct points on r indeterminates, with per-column level
/// counts n_j. Immutable after construction.
class Design {
 public:
  /// Requires pairwise distinct rows and n > 1; use from_rows to deduplicate.
  explicit Design(Matrix points);

  struct DedupResult;
  /// Keeps distinct rows in first-occurrence order.
  static DedupResult from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t n() const { return points_.rows(); }
  std::size_t arity() const { return points_.cols(); }
  const Matrix& points() const { return points_; }
  const Rational& at(std::size_t i, std::size_t j) const { return points_(i, j); }

  /// Number of distinct values taken by each indeterminate.
  const std::vector<std::size_t>& level_counts() const { return level_counts_; }

  /// Indices of columns with a single level (legal but worth a warning).
  std::vector<std::size_t> single_level_columns() const;

 private:
  Matrix points_;
  std::vector<std::size_t> level_counts_;
};

struct Design::DedupResult {
  Design design;
  std::size_t dropped_duplicates;
};

struct LoadedDesign {
  Design design;
  std::size_t dropped_duplicates = 0;
  std::vector<std::string> column_names;  // only with a header row
};

/// Reads a CSV/TSV table, one point per row, entries integer/decimal/fraction.
LoadedDesign load_design(std::istream& in, bool header = false);
LoadedDesign load_design_file(const std::string& path, bool header = false);

/// The design on the indeterminate subset U (0-based indices), rows
/// deduplicated in first-occurrence order; its n is the paper-level n_U.
Design project(const Design& d, const std::vector<std::size_t>& indices);

/// Entry i = prod_j x_ij^(m_j); the zero monomial gives the all-ones vector.
std::vector<Rational> monomial_vector(const Design& d, const Monomial& m);

/// n x p matrix whose k-th column is the monomial vector of the model's k-th
/// term in canonical storage order.
Matrix model_matrix(const Design& d, const Model& model);

/// rank(model matrix) == p.
bool is_identifiable(const Design& d, const Model& model);

/// Hierarchical, identifiable and saturated (p == n).
bool is_his(const Design& d, const Model& model);

}  // namespace statfan

#endif
