#include <doctest.h>

#include "statfan/errors.hpp"
#include "statfan/search.hpp"
#include "test_util.hpp"

using namespace statfan;
using test::model_of;

TEST_SUITE_BEGIN("search");

TEST_CASE("default level values are symmetric and equally spaced") {
  auto three = default_level_values(3);
  CHECK(three == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  auto four = default_level_values(4);
  CHECK(four == std::vector<Rational>{Rational(-1), Rational(-1, 3), Rational(1, 3), Rational(1)});
}

TEST_CASE("the full factorial is the single design of its own size") {
  SearchConfig config;
  config.levels = {2, 2};
  config.n = 4;
  config.required.push_back(model_of(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  SearchResult result = search_designs(config);
  CHECK(result.total_designs == 1);
  CHECK(result.supporting_all == 1);
  CHECK(result.per_leaf_support == std::vector<std::size_t>{1});
}

TEST_CASE("an empty requirement set is vacuously satisfied") {
  SearchConfig config;
  config.levels = {2, 2};
  config.n = 2;
  SearchResult result = search_designs(config);
  CHECK(result.total_designs == 6);
  CHECK(result.supporting_all == 6);
}

TEST_CASE("two-point designs support the x1 model iff x1 varies") {
  SearchConfig config;
  config.levels = {2, 2};
  config.n = 2;
  config.required.push_back(model_of(2, {{0, 0}, {1, 0}}));
  SearchResult result = search_designs(config);
  // Four of the six point pairs take both x1 values.
  CHECK(result.per_leaf_support == std::vector<std::size_t>{4});
  CHECK(result.supporting_all == 4);
}

TEST_CASE("parallel execution returns the same counts") {
  SearchConfig config;
  config.levels = {4, 3};
  config.n = 8;
  config.required.push_back(
      model_of(2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}));
  SearchResult serial = search_designs(config);
  config.jobs = 4;
  SearchResult parallel = search_designs(config);
  CHECK(serial.total_designs == parallel.total_designs);
  CHECK(serial.per_leaf_support == parallel.per_leaf_support);
  CHECK(serial.supporting_all == parallel.supporting_all);
}

TEST_CASE("configuration errors") {
  SearchConfig config;
  config.levels = {2, 2};
  config.n = 5;
  CHECK_THROWS_AS((void)search_designs(config), std::invalid_argument);

  config.n = 2;
  config.max_designs = 3;
  CHECK_THROWS_AS((void)search_designs(config), CapExceeded);

  SearchConfig bad_values;
  bad_values.levels = {2, 2};
  bad_values.n = 2;
  bad_values.values = {{Rational(0)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS((void)search_designs(bad_values), std::invalid_argument);

  SearchConfig bad_leaf;
  bad_leaf.levels = {2, 2};
  bad_leaf.n = 2;
  bad_leaf.required.push_back(model_of(3, {{0, 0, 0}}));
  CHECK_THROWS_AS((void)search_designs(bad_leaf), std::invalid_argument);
}

TEST_SUITE_END();
