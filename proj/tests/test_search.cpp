#include <doctest.h>

#include "dilates/bounds.hpp"
#include "dilates/checked.hpp"
#include "dilates/error.hpp"
#include "dilates/search.hpp"
#include "oracle.hpp"

using namespace dilates;

namespace {

std::vector<oracle::Vec> as_vectors(const std::vector<IntSet>& sets) {
  std::vector<oracle::Vec> out;
  for (const auto& s : sets) out.push_back(s.list());
  return out;
}

/// Minimum and all minimizers by scoring every oracle-enumerated set.
std::pair<std::int64_t, std::vector<oracle::Vec>> brute_minimum(const oracle::Vec& coeffs, int n,
                                                                int range, bool reflect) {
  std::int64_t best = INT64_MAX;
  std::vector<oracle::Vec> winners;
  for (const auto& a : oracle::canonical_sets(n, range, reflect)) {
    const auto v = static_cast<std::int64_t>(oracle::dilate_sum(a, coeffs).size());
    if (v < best) {
      best = v;
      winners.clear();
    }
    if (v == best) winners.push_back(a);
  }
  return {best, winners};
}

}  // namespace

TEST_CASE("enumerate_canonical examples") {
  CHECK(as_vectors(canonical_sets(2, 5, true)) == std::vector<oracle::Vec>{{0, 1}});
  CHECK(as_vectors(canonical_sets(3, 4, false)) ==
        std::vector<oracle::Vec>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 3, 4}});
  CHECK(as_vectors(canonical_sets(3, 4, true)) ==
        std::vector<oracle::Vec>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  CHECK(as_vectors(canonical_sets(1, 0, true)) == std::vector<oracle::Vec>{{0}});
  CHECK_THROWS_AS(canonical_sets(4, 2, true), InvalidArgument);
  CHECK_THROWS_AS(canonical_sets(0, 2, true), InvalidArgument);
}

TEST_CASE("enumeration matches the bitmask oracle") {
  for (int n = 1; n <= 5; ++n)
    for (int r = n - 1; r <= 11; ++r)
      for (bool reflect : {false, true})
        CHECK(as_vectors(canonical_sets(n, r, reflect)) == oracle::canonical_sets(n, r, reflect));
}

TEST_CASE("min_dilate_sum examples") {
  SearchConfig config{.spec = {2, 3}, .cardinality = 2, .range_max = 12};
  auto r = min_dilate_sum(config);
  CHECK(r.minimum == 4);
  CHECK(r.witnesses == std::vector<IntSet>{IntSet{0, 1}});

  config.cardinality = 3;
  r = min_dilate_sum(config);
  CHECK(r.minimum == 8);
  CHECK(r.witnesses.front() == IntSet{0, 1, 3});
  CHECK(r.witness_count == r.witnesses.size());

  config.cardinality = 1;
  config.range_max = 0;
  r = min_dilate_sum(config);
  CHECK(r.minimum == 1);
  CHECK(r.witnesses == std::vector<IntSet>{IntSet{0}});
}

TEST_CASE("config validation") {
  SearchConfig config{.spec = {2, 3}, .cardinality = 5, .range_max = 3};
  CHECK_THROWS_AS(min_dilate_sum(config), InvalidArgument);
  config = {.spec = {2, 3}, .cardinality = 2, .range_max = 3, .parallel_width = 0};
  CHECK_THROWS_AS(min_dilate_sum(config), InvalidArgument);
  config = {.spec = {2, 4}, .cardinality = 2, .range_max = 3, .component_pruning = true};
  CHECK_THROWS_AS(min_dilate_sum(config), InvalidArgument);
  config = {.spec = {2, 3}, .cardinality = 2, .range_max = 3, .witness_cap = 0};
  CHECK_THROWS_AS(min_dilate_sum(config), InvalidArgument);
  config = {.spec = {2, 3}, .cardinality = 2, .range_max = std::int64_t{1} << 40};
  CHECK_THROWS_AS(min_dilate_sum(config), InvalidArgument);
}

TEST_CASE("search agrees with brute force, every mode") {
  const std::vector<oracle::Vec> specs{{2, 3}, {1, 2}, {-1, 3}, {1, 2, 5}, {-3, -2}};
  for (const auto& coeffs : specs) {
    for (int n = 1; n <= 5; ++n) {
      for (int range = std::max(n - 1, 1); range <= 10; range += 3) {
        for (bool reflect : {true, false}) {
          const auto [best, winners] = brute_minimum(coeffs, n, range, reflect);
          SearchConfig base{.spec = DilateSpec(coeffs),
                            .cardinality = n,
                            .range_max = range,
                            .reflection_quotient = reflect,
                            .pruning = false};
          const auto plain = min_dilate_sum(base);
          CHECK(plain.minimum == best);
          CHECK(as_vectors(plain.witnesses) == winners);
          CHECK(plain.witness_count == winners.size());
          CHECK(plain.nodes_pruned == 0);

          auto pruned = base;
          pruned.pruning = true;
          auto wide = pruned;
          wide.parallel_width = 4;
          CHECK(min_dilate_sum(pruned).same_outcome(plain));
          CHECK(min_dilate_sum(wide).same_outcome(plain));
        }
      }
    }
  }
}

TEST_CASE("component pruning is sound") {
  for (int n = 2; n <= 5; ++n) {
    for (int range = n; range <= 13; range += 2) {
      SearchConfig base{.spec = {2, 3}, .cardinality = n, .range_max = range};
      auto extra = base;
      extra.component_pruning = true;
      CHECK(min_dilate_sum(extra).same_outcome(min_dilate_sum(base)));
      extra.spec = DilateSpec{3, -4};
      base.spec = extra.spec;
      CHECK(min_dilate_sum(extra).same_outcome(min_dilate_sum(base)));
    }
  }
}

TEST_CASE("witness cap keeps the smallest witnesses and the exact count") {
  SearchConfig config{.spec = {1, 2}, .cardinality = 3, .range_max = 12};
  const auto all = min_dilate_sum(config);
  config.witness_cap = 1;
  const auto capped = min_dilate_sum(config);
  CHECK(capped.minimum == all.minimum);
  CHECK(capped.witness_count == all.witness_count);
  REQUIRE(capped.witnesses.size() == 1);
  CHECK(capped.witnesses.front() == all.witnesses.front());
}

TEST_CASE("pruning does cut the tree") {
  // At n = 5 no 4-element prefix reaches the minimum 18, so nothing can be cut.
  SearchConfig config{.spec = {2, 3}, .cardinality = 6, .range_max = 20};
  const auto pruned = min_dilate_sum(config);
  config.pruning = false;
  const auto plain = min_dilate_sum(config);
  CHECK(pruned.same_outcome(plain));
  CHECK(pruned.nodes_pruned > 0);
  CHECK(pruned.nodes_visited < plain.nodes_visited);
}

TEST_CASE("monotone in n and consistent with the small-set bound") {
  for (std::int64_t k : {3, 5}) {
    std::int64_t previous = 0;
    for (std::int64_t n = 1; n <= 6; ++n) {
      SearchConfig config{.spec = {2, k}, .cardinality = n, .range_max = 12};
      const auto r = min_dilate_sum(config);
      CHECK(r.minimum >= previous);
      previous = r.minimum;
      CHECK(r.minimum >= (k + 2) * n - 4 * checked::pow(k, static_cast<unsigned>(k - 1)));
      for (const auto& w : r.witnesses) {
        CHECK(is_canonical(w));
        CHECK(w.max() <= 12);
        CHECK(static_cast<std::int64_t>(dilate_sum(w, config.spec).size()) == r.minimum);
      }
    }
  }
}

TEST_CASE("conjecture_probe examples") {
  auto rows = conjecture_probe({2, 3}, 2, 3, 12);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].cardinality == 2);
  CHECK(rows[0].minimum == 4);
  CHECK(rows[0].deficiency == 6);
  CHECK(rows[1].minimum == 8);
  CHECK(rows[1].deficiency == 7);
  CHECK(rows[1].witness == IntSet{0, 1, 3});
  CHECK(rows[1].non_progression_witness);

  rows = conjecture_probe({1, 2}, 2, 2, 12);
  CHECK(rows.at(0).minimum == 4);
  CHECK(rows.at(0).deficiency == 2);

  rows = conjecture_probe({2, 3}, 1, 1, 12);
  CHECK(rows.at(0).minimum == 1);
  CHECK(rows.at(0).deficiency == 4);

  CHECK_THROWS_AS(conjecture_probe({2, 4}, 1, 3, 12), InvalidArgument);
  CHECK_THROWS_AS(conjecture_probe({2, 3}, 3, 2, 12), InvalidArgument);
}
