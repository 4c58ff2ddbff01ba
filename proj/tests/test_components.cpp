#include <doctest.h>

#include <numeric>
#include <random>

#include "dilates/components.hpp"
#include "dilates/error.hpp"
#include "oracle.hpp"

using namespace dilates;

namespace {

void check_partition(const IntSet& a, const Decomposition& d) {
  std::vector<std::int64_t> all;
  for (const auto& [r, block] : d.blocks()) {
    CHECK(r >= 0);
    CHECK(r < d.modulus());
    for (auto x : block) {
      CHECK(((x % d.modulus()) + d.modulus()) % d.modulus() == r);
      all.push_back(x);
    }
  }
  std::sort(all.begin(), all.end());
  CHECK(all == a.list());
  CHECK(d.count() >= 1);
  CHECK(d.count() <= std::min<std::size_t>(static_cast<std::size_t>(d.modulus()), a.size()));
}

}  // namespace

TEST_CASE("decompose examples") {
  auto d = decompose({0, 1, 2}, 3);
  CHECK(d.count() == 3);
  CHECK(d.block(0) == IntSet{0});
  CHECK(d.block(1) == IntSet{1});
  CHECK(d.block(2) == IntSet{2});

  d = decompose({0, 3, 6}, 3);
  CHECK(d.count() == 1);
  CHECK(d.block(0) == IntSet{0, 3, 6});

  d = decompose({0, 1, 3}, 2);
  CHECK(d.count() == 2);
  CHECK(d.block(0) == IntSet{0});
  CHECK(d.block(1) == IntSet{1, 3});

  CHECK_THROWS_AS(decompose({0, 1}, 1), InvalidArgument);
  CHECK_THROWS_AS(d.block(5), InvalidArgument);
}

TEST_CASE("negative elements use Euclidean residues") {
  const auto d = decompose({-4, -1, 2, 5}, 3);
  CHECK(d.count() == 1);
  CHECK(d.has(2));
  check_partition({-4, -1, 2, 5}, d);
}

TEST_CASE("fullness predicates") {
  CHECK(is_full({0, 1, 2}, 3));
  CHECK_FALSE(is_full({0, 3, 6}, 3));
  CHECK(is_full({0, 1, 3}, 2));

  CHECK(is_semi_full({0, 3, 6}, 3));
  CHECK_FALSE(is_semi_full({0, 1, 2}, 3));
  CHECK_FALSE(is_semi_full({0, 9, 18}, 3));
  CHECK_THROWS_AS(is_full({0}, 0), InvalidArgument);
}

TEST_CASE("primality") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(13));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_FALSE(is_odd_prime(-3));
  CHECK_THROWS_AS(require_odd_prime(15), InvalidArgument);
}

TEST_CASE("marginal_set examples") {
  CHECK(marginal_set({0}, {0, 1, 2}, 3) == IntList{3, 6});
  CHECK(marginal_set({1}, {0, 1, 2}, 3) == IntList{2, 8});
  CHECK(marginal_set({0, 3, 6}, {0, 3, 6}, 3).empty());
}

TEST_CASE("marginal_set validates the component") {
  CHECK_THROWS_AS(marginal_set({0, 1}, {0, 1, 2}, 3), InvalidArgument);
  CHECK_THROWS_AS(marginal_set({0}, {0, 3, 6}, 3), InvalidArgument);
  CHECK_THROWS_AS(marginal_set({4}, {0, 1, 2}, 3), InvalidArgument);
}

TEST_CASE("marginal_split examples") {
  auto s = marginal_split({0}, {0, 1, 2}, 3);
  CHECK(s.low.empty());
  CHECK(s.interior.empty());
  CHECK(s.high == IntList{3, 6});

  s = marginal_split({1}, {0, 1, 2}, 3);
  CHECK(s.low == IntList{2});
  CHECK(s.high == IntList{8});

  s = marginal_split({2}, {0, 1, 2}, 3);
  CHECK(s.low == IntList{4, 7});
  CHECK(s.high.empty());
}

TEST_CASE("stabilizer examples") {
  CHECK(stabilizer({0, 3, 6}, 9) == std::vector<std::int64_t>{0, 3, 6});
  CHECK(stabilizer({0, 1}, 9) == std::vector<std::int64_t>{0});
  CHECK(stabilizer({0, 1, 2, 3, 4, 5, 6, 7, 8}, 9) ==
        std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_THROWS_AS(stabilizer({9}, 9), InvalidArgument);
  CHECK_THROWS_AS(stabilizer({}, 9), InvalidArgument);
}

TEST_CASE("property: stabilizer order divides |X| and m") {
  std::mt19937_64 rng(11);
  for (std::int64_t m : {4, 6, 9, 12, 25}) {
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> size(1, static_cast<std::size_t>(m));
      const auto x = oracle::random_set(rng, size(rng), 0, m - 1);
      const auto pi = stabilizer(x, m);
      CHECK(pi.front() == 0);
      CHECK(x.size() % pi.size() == 0);
      CHECK(m % static_cast<std::int64_t>(pi.size()) == 0);
      for (auto s : pi)
        for (auto t : pi) CHECK(std::binary_search(pi.begin(), pi.end(), (s + t) % m));
    }
  }
}

TEST_CASE("property: decomposition and marginal sets on random sets") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 10);
    const auto a = IntSet::from_sorted(oracle::random_set(rng, size(rng), -25, 25));
    for (std::int64_t k : {3, 5, 7}) {
      const auto d = decompose(a, k);
      check_partition(a, d);
      std::int64_t total = 0;
      for (const auto& [r, c] : d.blocks()) {
        const auto m = marginal_set(c, a, k);
        const auto own = minkowski_sum(dilate(c, 2), dilate(c, k));
        const auto whole = minkowski_sum(dilate(c, 2), dilate(a, k));
        std::vector<std::int64_t> both(m.begin(), m.end());
        both.insert(both.end(), own.begin(), own.end());
        std::sort(both.begin(), both.end());
        CHECK(std::adjacent_find(both.begin(), both.end()) == both.end());
        CHECK(both == whole.list());

        const auto split = marginal_split(c, a, k);
        CHECK(split.size() == m.size());
        for (auto x : split.low) CHECK(x < own.min());
        for (auto x : split.high) CHECK(x > own.max());
        total += static_cast<std::int64_t>(m.size());
      }
      const auto count = static_cast<std::int64_t>(d.count());
      CHECK(total >= (count - 1) * count);
    }
  }
}

TEST_CASE("exhaustive: component translates of nA + mB are disjoint modulo m") {
  // For coprime (n, m) and distinct m-components C, T of A, the sets
  // nC + mB and nT + mB never meet.
  const std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{2, 3}, {3, 4}, {2, 5}, {3, 5}};
  for (const auto& a : oracle::canonical_sets(4, 9, false)) {
    for (const auto& b : oracle::canonical_sets(3, 6, false)) {
      const auto A = IntSet::from_sorted(a);
      const auto B = IntSet::from_sorted(b);
      for (auto [n, m] : pairs) {
        std::vector<IntSet> parts;
        for (const auto& [r, c] : decompose(A, m).blocks())
          parts.push_back(minkowski_sum(dilate(c, n), dilate(B, m)));
        for (std::size_t i = 0; i < parts.size(); ++i)
          for (std::size_t j = i + 1; j < parts.size(); ++j) {
            std::vector<std::int64_t> common;
            std::set_intersection(parts[i].begin(), parts[i].end(), parts[j].begin(),
                                  parts[j].end(), std::back_inserter(common));
            CHECK(common.empty());
          }
      }
    }
  }
}
