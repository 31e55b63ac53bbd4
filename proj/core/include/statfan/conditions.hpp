#ifndef STATFAN_CONDITIONS_HPP
#define STATFAN_CONDITIONS_HPP

#include <cstddef>
#include <vector>

#include "statfan/design.hpp"
#include "statfan/monomial.hpp"

namespace statfan {

/// Necessary condition for membership in a hierarchical identifiable model:
/// prod(alpha_j + 1) <= n.
bool necessary_total(const Monomial& m, std::size_t n);

/// Box condition: alpha_j <= n_j - 1 for all j.
bool necessary_box(const Monomial& m, const std::vector<std::size_t>& levels);

struct SubsetVerdict {
  bool ok;
  std::vector<std::size_t> witness;  // a violating subset (0-based) when !ok
};

/// All-subset condition: prod_{i in U}(alpha_i + 1) <= n_U for every nonempty
/// subset U of the indeterminates.
SubsetVerdict necessary_subsets(const Design& d, const Monomial& m);

/// G(alpha) = prod n_i - prod(n_i - alpha_i) + 1; any design with n >= G(alpha)
/// has alpha in every leaf of its statistical fan. Requires alpha_i < n_i.
long long g_value(const std::vector<std::size_t>& levels, const Monomial& m);

struct GEntry {
  Monomial monomial;
  int degree;
  long long g;
};

/// One entry per box-interior monomial except the constant (its G is
/// undefined), sorted by g, then degree, then canonical order.
std::vector<GEntry> g_table(const std::vector<std::size_t>& levels);

/// Monomials guaranteed to appear in every leaf for a design with the given
/// level counts and n points: the in-box alphas with G(alpha) <= n, plus the
/// constant monomial.
std::vector<Monomial> guaranteed_monomials(const std::vector<std::size_t>& levels, std::size_t n);

}  // namespace statfan

#endif
