#include <doctest.h>

#include <map>
#include <random>

#include "statfan/conditions.hpp"
#include "test_util.hpp"

using namespace statfan;
using test::mono;

TEST_SUITE_BEGIN("conditions");

TEST_CASE("total-degree condition") {
  CHECK_FALSE(necessary_total(mono({2, 0, 1}), 5));  // 6 constituents > 5 points
  CHECK(necessary_total(mono({0, 0, 0}), 1));
  CHECK(necessary_total(mono({1, 1}), 4));
}

TEST_CASE("box condition") {
  CHECK(necessary_box(mono({0, 1, 2}), {3, 2, 3}));
  CHECK_FALSE(necessary_box(mono({0, 2, 0}), {3, 2, 3}));
  CHECK(necessary_box(mono({0, 0, 0}), {3, 2, 3}));
  CHECK_THROWS_AS((void)necessary_box(mono({1}), {2, 2}), std::invalid_argument);
}

TEST_CASE("subset condition with witnesses") {
  Design d1 = test::load_data_design("d1.csv");
  CHECK(necessary_subsets(d1, mono({0, 1, 1})).ok);
  auto verdict = necessary_subsets(d1, mono({1, 1, 0}));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.witness == std::vector<std::size_t>{0, 1});  // n_U = 3 < 4
  CHECK(necessary_subsets(d1, mono({0, 0, 0})).ok);
}

TEST_CASE("subset condition implies the weaker conditions") {
  Design d1 = test::load_data_design("d1.csv");
  std::mt19937 rng(139);
  for (int iter = 0; iter < 100; ++iter) {
    Monomial m = test::random_monomial(rng, 3, 3);
    if (necessary_subsets(d1, m).ok) {
      CHECK(necessary_total(m, d1.n()));
      CHECK(necessary_box(m, d1.level_counts()));
    }
  }
}

TEST_CASE("G values from the planning table") {
  std::vector<std::size_t> levels{2, 2, 3, 3};
  CHECK(g_value(levels, mono({0, 0, 1, 0})) == 13);
  CHECK(g_value(levels, mono({1, 0, 0, 0})) == 19);
  CHECK(g_value(levels, mono({1, 1, 2, 2})) == 36);
  CHECK_THROWS_AS((void)g_value(levels, mono({2, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("the complete 35-entry table for levels (2,2,3,3)") {
  // Frozen reference: exponent tuple -> (degree, G).
  const std::map<std::vector<int>, std::pair<int, long long>> expected{
      {{0, 0, 1, 0}, {1, 13}}, {{0, 0, 0, 1}, {1, 13}}, {{1, 0, 0, 0}, {1, 19}},
      {{0, 1, 0, 0}, {1, 19}}, {{0, 0, 1, 1}, {2, 21}}, {{1, 0, 1, 0}, {2, 25}},
      {{1, 0, 0, 1}, {2, 25}}, {{0, 1, 1, 0}, {2, 25}}, {{0, 1, 0, 1}, {2, 25}},
      {{0, 0, 2, 0}, {2, 25}}, {{0, 0, 0, 2}, {2, 25}}, {{1, 1, 0, 0}, {2, 28}},
      {{0, 1, 1, 1}, {3, 29}}, {{1, 0, 1, 1}, {3, 29}}, {{0, 0, 1, 2}, {3, 29}},
      {{0, 0, 2, 1}, {3, 29}}, {{1, 0, 2, 0}, {3, 31}}, {{1, 1, 1, 0}, {3, 31}},
      {{1, 1, 0, 1}, {3, 31}}, {{1, 0, 0, 2}, {3, 31}}, {{0, 1, 2, 0}, {3, 31}},
      {{0, 1, 0, 2}, {3, 31}}, {{1, 1, 1, 1}, {4, 33}}, {{1, 0, 1, 2}, {4, 33}},
      {{0, 1, 2, 1}, {4, 33}}, {{1, 0, 2, 1}, {4, 33}}, {{0, 1, 1, 2}, {4, 33}},
      {{0, 0, 2, 2}, {4, 33}}, {{1, 1, 2, 0}, {4, 34}}, {{1, 1, 0, 2}, {4, 34}},
      {{1, 1, 2, 1}, {5, 35}}, {{1, 1, 1, 2}, {5, 35}}, {{1, 0, 2, 2}, {5, 35}},
      {{0, 1, 2, 2}, {5, 35}}, {{1, 1, 2, 2}, {6, 36}}};

  auto table = g_table({2, 2, 3, 3});
  REQUIRE(table.size() == 35);
  for (const GEntry& entry : table) {
    auto it = expected.find(entry.monomial.exponents());
    REQUIRE(it != expected.end());
    CHECK(entry.degree == it->second.first);
    CHECK(entry.g == it->second.second);
  }
  for (std::size_t k = 1; k < table.size(); ++k) CHECK(table[k - 1].g <= table[k].g);
}

TEST_CASE("G is monotone in the exponents") {
  auto table = g_table({2, 2, 3, 3});
  for (const GEntry& a : table)
    for (const GEntry& b : table)
      if (is_constituent(a.monomial, b.monomial)) CHECK(a.g <= b.g);
}

TEST_CASE("four-level planning bounds") {
  std::vector<std::size_t> levels{4, 4, 4, 4};
  for (std::size_t j = 0; j < 4; ++j) CHECK(g_value(levels, Monomial::unit(4, j)) == 65);
  CHECK(g_value(levels, mono({0, 0, 2, 0})) == 129);
}

TEST_CASE("unit monomial bound matches m^(r-1) + 1") {
  for (std::size_t m = 2; m <= 5; ++m) {
    for (std::size_t r = 1; r <= 5; ++r) {
      std::vector<std::size_t> levels(r, m);
      long long expected = 1;
      for (std::size_t k = 0; k + 1 < r; ++k) expected *= static_cast<long long>(m);
      ++expected;
      for (std::size_t j = 0; j < r; ++j)
        CHECK(g_value(levels, Monomial::unit(r, j)) == expected);
    }
  }
}

TEST_CASE("guaranteed monomials for the planning examples") {
  // Twelve terms are guaranteed once n >= 25 at levels (2,2,3,3).
  auto guaranteed = guaranteed_monomials({2, 2, 3, 3}, 25);
  Model expected = test::model_of(4, {{0, 0, 0, 0},
                                      {1, 0, 0, 0},
                                      {0, 1, 0, 0},
                                      {0, 0, 1, 0},
                                      {0, 0, 0, 1},
                                      {0, 0, 1, 1},
                                      {1, 0, 1, 0},
                                      {1, 0, 0, 1},
                                      {0, 1, 1, 0},
                                      {0, 1, 0, 1},
                                      {0, 0, 2, 0},
                                      {0, 0, 0, 2}});
  CHECK(Model(4, guaranteed) == expected);

  // Levels (4,3) with n = 8.
  auto small = guaranteed_monomials({4, 3}, 8);
  CHECK(Model(2, small) ==
        test::model_of(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}}));

  // All degree-one monomials are guaranteed at n = m^(r-1) + 1.
  for (std::size_t m = 2; m <= 4; ++m) {
    std::vector<std::size_t> levels(3, m);
    std::size_t n = m * m + 1;
    auto set = guaranteed_monomials(levels, n);
    Model as_model(3, set);
    for (std::size_t j = 0; j < 3; ++j) CHECK(as_model.contains(Monomial::unit(3, j)));
  }
}

TEST_CASE("the constant monomial has no table entry but is always guaranteed") {
  auto table = g_table({2, 2});
  for (const GEntry& entry : table) CHECK_FALSE(entry.monomial.is_constant());
  auto guaranteed = guaranteed_monomials({2, 2}, 2);
  CHECK(Model(2, guaranteed).contains(mono({0, 0})));
}

TEST_SUITE_END();
