#ifndef STATFAN_SEARCH_HPP
#define STATFAN_SEARCH_HPP

#include <cstddef>
#include <vector>

#include "statfan/model.hpp"
#include "statfan/rational.hpp"

namespace statfan {

/// Equally spaced symmetric level values on [-1, 1]; a single level is 0.
std::vector<Rational> default_level_values(std::size_t count);

struct SearchConfig {
  std::vector<std::size_t> levels;            // level counts n_1..n_r
  std::vector<std::vector<Rational>> values;  // level values; default when empty
  std::size_t n = 0;                          // design size
  std::vector<Model> required;                // leaves every design must support
  std::size_t jobs = 1;
  std::size_t max_designs = 1'000'000;
};

struct SearchResult {
  std::size_t total_designs = 0;
  unsigned long long staircase_count = 0;      // size-n staircases in the box
  std::vector<std::size_t> per_leaf_support;   // designs where leaf k is HIS
  std::size_t supporting_all = 0;
};

/// Enumerates every n-point subset of the full factorial on the given levels
/// and tests which required leaves are HIS under each.
SearchResult search_designs(const SearchConfig& config);

}  // namespace statfan

#endif
