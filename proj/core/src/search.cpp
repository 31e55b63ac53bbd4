#include "statfan/search.hpp"

#include <atomic>
#include <stdexcept>

#include "statfan/design.hpp"
#include "statfan/errors.hpp"
#include "statfan/fan.hpp"
#include "statfan/parallel.hpp"

namespace statfan {

std::vector<Rational> default_level_values(std::size_t count) {
  if (count == 0) throw std::invalid_argument("level count must be positive");
  std::vector<Rational> out;
  out.reserve(count);
  if (count == 1) {
    out.emplace_back(0);
    return out;
  }
  for (std::size_t k = 0; k < count; ++k) {
    // -1 + 2k/(count-1)
    Rational v = Rational(-1) + Rational(2 * static_cast<long>(k), static_cast<long>(count - 1));
    v.canonicalize();
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

unsigned long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    unsigned long long next = out * (n - k + i);
    if (next / (n - k + i) != out) throw std::overflow_error("binomial overflows");
    out = next / i;
  }
  return out;
}

/// The `rank`-th k-subset of {0..n-1} in lexicographic order.
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k,
                                            unsigned long long rank) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t element = 0;
  for (std::size_t remaining = k; remaining > 0; --remaining) {
    while (true) {
      unsigned long long with_element = binomial(n - element - 1, remaining - 1);
      if (rank < with_element) break;
      rank -= with_element;
      ++element;
    }
    out.push_back(element);
    ++element;
  }
  return out;
}

}  // namespace

SearchResult search_designs(const SearchConfig& config) {
  const std::size_t r = config.levels.size();
  if (r == 0) throw std::invalid_argument("search needs at least one factor");
  if (config.n < 2) throw std::invalid_argument("search needs n >= 2");

  std::vector<std::vector<Rational>> values = config.values;
  if (values.empty()) {
    values.reserve(r);
    for (std::size_t levels : config.levels) values.push_back(default_level_values(levels));
  }
  if (values.size() != r) throw std::invalid_argument("level values do not match factor count");
  for (std::size_t j = 0; j < r; ++j)
    if (values[j].size() != config.levels[j])
      throw std::invalid_argument("level values do not match the level count");

  for (const Model& leaf : config.required)
    if (leaf.arity() != r) throw std::invalid_argument("required leaf arity mismatch");

  // Full factorial point set.
  std::vector<std::vector<Rational>> factorial;
  std::vector<std::size_t> counter(r, 0);
  while (true) {
    std::vector<Rational> point(r);
    for (std::size_t j = 0; j < r; ++j) point[j] = values[j][counter[j]];
    factorial.push_back(std::move(point));
    std::size_t j = 0;
    while (j < r && counter[j] + 1 == config.levels[j]) {
      counter[j] = 0;
      ++j;
    }
    if (j == r) break;
    ++counter[j];
  }

  const std::size_t total_points = factorial.size();
  if (config.n > total_points)
    throw std::invalid_argument("design size exceeds the full factorial");
  unsigned long long total = binomial(total_points, config.n);
  if (total > config.max_designs)
    throw CapExceeded("search over " + std::to_string(total) + " designs exceeds cap " +
                      std::to_string(config.max_designs));

  SearchResult result;
  result.total_designs = static_cast<std::size_t>(total);
  result.staircase_count = count_staircases(config.levels, config.n);
  result.per_leaf_support.assign(config.required.size(), 0);

  std::vector<std::atomic<std::size_t>> leaf_hits(config.required.size());
  for (auto& hit : leaf_hits) hit.store(0);
  std::atomic<std::size_t> all_hits{0};

  parallel_for(config.jobs == 0 ? 1 : config.jobs, static_cast<std::size_t>(total),
               [&](std::size_t index) {
                 std::vector<std::size_t> combo =
                     unrank_combination(total_points, config.n, index);
                 std::vector<std::vector<Rational>> rows;
                 rows.reserve(config.n);
                 for (std::size_t i : combo) rows.push_back(factorial[i]);
                 Design design(Matrix::from_rows(rows));
                 bool all = true;
                 for (std::size_t k = 0; k < config.required.size(); ++k) {
                   if (is_his(design, config.required[k]))
                     leaf_hits[k].fetch_add(1, std::memory_order_relaxed);
                   else
                     all = false;
                 }
                 if (all) all_hits.fetch_add(1, std::memory_order_relaxed);
               });

  for (std::size_t k = 0; k < leaf_hits.size(); ++k)
    result.per_leaf_support[k] = leaf_hits[k].load();
  result.supporting_all = all_hits.load();
  return result;
}

}  // namespace statfan
