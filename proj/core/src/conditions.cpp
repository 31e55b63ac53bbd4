#include "statfan/conditions.hpp"

#include <algorithm>
#include <stdexcept>

namespace statfan {

namespace {

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("level product overflows");
  return out;
}

/// All monomials inside the box alpha_j <= levels_j - 1, canonically sorted.
std::vector<Monomial> box_monomials(const std::vector<std::size_t>& levels) {
  for (std::size_t l : levels)
    if (l == 0) throw std::invalid_argument("level counts must be positive");
  std::vector<Monomial> out;
  std::vector<int> current(levels.size(), 0);
  while (true) {
    out.emplace_back(current);
    std::size_t j = 0;
    while (j < levels.size() && current[j] + 1 == static_cast<int>(levels[j])) {
      current[j] = 0;
      ++j;
    }
    if (j == levels.size()) break;
    ++current[j];
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

bool necessary_total(const Monomial& m, std::size_t n) {
  long long product = 1;
  for (std::size_t j = 0; j < m.arity(); ++j) product = checked_mul(product, m[j] + 1);
  return product <= static_cast<long long>(n);
}

bool necessary_box(const Monomial& m, const std::vector<std::size_t>& levels) {
  if (m.arity() != levels.size())
    throw std::invalid_argument("monomial arity does not match level count");
  for (std::size_t j = 0; j < m.arity(); ++j)
    if (m[j] > static_cast<int>(levels[j]) - 1) return false;
  return true;
}

SubsetVerdict necessary_subsets(const Design& d, const Monomial& m) {
  if (m.arity() != d.arity())
    throw std::invalid_argument("monomial arity does not match design");
  const std::size_t r = d.arity();
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    std::vector<std::size_t> subset;
    long long product = 1;
    for (std::size_t j = 0; j < r; ++j) {
      if (mask & (std::size_t{1} << j)) {
        subset.push_back(j);
        product = checked_mul(product, m[j] + 1);
      }
    }
    std::size_t n_u = project(d, subset).n();
    if (product > static_cast<long long>(n_u)) return SubsetVerdict{false, subset};
  }
  return SubsetVerdict{true, {}};
}

long long g_value(const std::vector<std::size_t>& levels, const Monomial& m) {
  if (m.arity() != levels.size())
    throw std::invalid_argument("monomial arity does not match level count");
  long long box = 1;
  long long complement = 1;
  for (std::size_t j = 0; j < levels.size(); ++j) {
    if (m[j] >= static_cast<int>(levels[j]))
      throw std::invalid_argument("monomial outside the level box; G is undefined");
    box = checked_mul(box, static_cast<long long>(levels[j]));
    complement = checked_mul(complement, static_cast<long long>(levels[j]) - m[j]);
  }
  return box - complement + 1;
}

std::vector<GEntry> g_table(const std::vector<std::size_t>& levels) {
  std::vector<GEntry> out;
  for (const Monomial& m : box_monomials(levels)) {
    if (m.is_constant()) continue;  // Table prints "-" for the constant
    out.push_back(GEntry{m, m.degree(), g_value(levels, m)});
  }
  std::stable_sort(out.begin(), out.end(), [](const GEntry& a, const GEntry& b) {
    if (a.g != b.g) return a.g < b.g;
    if (a.degree != b.degree) return a.degree < b.degree;
    return canonical_less(a.monomial, b.monomial);
  });
  return out;
}

std::vector<Monomial> guaranteed_monomials(const std::vector<std::size_t>& levels, std::size_t n) {
  std::vector<Monomial> out;
  for (const Monomial& m : box_monomials(levels)) {
    if (m.is_constant()) {
      out.push_back(m);  // every hierarchical model contains 1
      continue;
    }
    if (g_value(levels, m) <= static_cast<long long>(n)) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace statfan
