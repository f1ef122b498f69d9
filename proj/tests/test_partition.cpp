#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "brute.hpp"
#include "dsum/errors.hpp"
#include "dsum/partition.hpp"

using namespace dsum;

namespace {

std::vector<Partition> collect(PartitionEnumerator en) {
  std::vector<Partition> out;
  while (auto p = en.next()) out.push_back(*p);
  return out;
}

std::vector<Partition> collect_family(std::uint32_t d, std::uint32_t s, std::uint64_t m) {
  BlockFamilyEnumerator en(d, s, m);
  std::vector<Partition> out;
  while (auto p = en.next()) out.push_back(*p);
  return out;
}

Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("construction validates invariants") {
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK(P({}).size() == 0);
  CHECK(P({3, 1}).size() == 4);
  CHECK(P({3, 1}).length() == 2);
}

TEST_CASE("text form round-trips") {
  CHECK(Partition::parse("[3,3,1,1]").parts() == std::vector<std::uint32_t>{3, 3, 1, 1});
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition::parse(" [ 2 , 1 ] ").to_string() == "[2,1]");
  CHECK(P({3, 3, 1, 1}).to_string() == "[3,3,1,1]");
  CHECK(P({}).to_string() == "[]");
  CHECK_THROWS_AS(Partition::parse("[2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("[3,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("[a]"), std::invalid_argument);
}

TEST_CASE("conjugate matches hand examples") {
  CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
  CHECK(P({2, 2}).conjugate() == P({2, 2}));
  CHECK(P({}).conjugate() == P({}));
}

TEST_CASE("conjugation is an involution for all n <= 30") {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    PartitionEnumerator en(n);
    while (auto p = en.next()) {
      CHECK(p->conjugate().conjugate() == *p);
      // column definition: conj_j counts parts >= j+1
      const auto conj = p->conjugate();
      for (std::size_t j = 0; j < conj.length(); ++j) {
        std::size_t count = 0;
        for (auto part : p->parts())
          if (part >= j + 1) ++count;
        CHECK(conj.parts()[j] == count);
      }
    }
  }
}

TEST_CASE("inflate repeats parts") {
  CHECK(inflate(BlockShape{P({3, 1}), 2}) == P({3, 3, 1, 1}));
  CHECK(inflate(P({5}), 3) == P({5, 5, 5}));  // the rectangle case
  CHECK(inflate(P({}), 4) == P({}));
  CHECK(inflate(P({3, 1}), 2).size() == 8);
  CHECK(inflate(P({3, 1}), 2).length() == 4);
}

TEST_CASE("enumeration edge cases") {
  CHECK(collect(PartitionEnumerator(0)) == std::vector<Partition>{P({})});
  CHECK(collect(PartitionEnumerator(4, 2)) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
  CHECK(collect(PartitionEnumerator(5)).size() == 7);
  CHECK(collect(PartitionEnumerator(1, 0)).empty());  // no parts allowed
}

TEST_CASE("enumeration is reverse-lex descending and matches brute force") {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    auto got = collect(PartitionEnumerator(n));
    auto expected = dsum::test::partitions_via_compositions(n);
    REQUIRE(got.size() == expected.size());
    CHECK(got == expected);
    for (std::size_t max_parts : {std::size_t{1}, std::size_t{2}, std::size_t{3}}) {
      CHECK(collect(PartitionEnumerator(n, max_parts)) ==
            dsum::test::partitions_via_compositions(n, max_parts));
    }
  }
}

TEST_CASE("counts match the pentagonal recurrence for n <= 30") {
  auto p = dsum::test::pentagonal_partition_counts(30);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    std::size_t count = 0;
    PartitionEnumerator en(n);
    while (en.next()) ++count;
    CHECK(count == static_cast<std::size_t>(p[n]));
    CHECK(count_partitions_atmost(n, kUnboundedParts) ==
          doctest::Approx(static_cast<double>(p[n])));
  }
}

TEST_CASE("first-part split ranges tile the full enumeration") {
  const std::uint64_t n = 18;
  const std::size_t max_parts = 6;
  auto full = collect(PartitionEnumerator(n, max_parts));
  std::vector<Partition> stitched;
  // windows [13,18], [7,12], [1,6]: descending so the concatenation
  // reproduces the full order
  for (std::uint32_t hi = 18; hi >= 6; hi -= 6) {
    auto piece = collect(PartitionEnumerator(n, max_parts, hi, hi - 5));
    stitched.insert(stitched.end(), piece.begin(), piece.end());
  }
  CHECK(stitched == full);
  std::set<Partition> unique(stitched.begin(), stitched.end());
  CHECK(unique.size() == stitched.size());
}

TEST_CASE("block family equals the brute-force filter for dm <= 24") {
  for (std::uint32_t d : {1u, 2u, 3u, 4u}) {
    for (std::uint32_t s : {1u, 2u, 3u, 5u}) {
      for (std::uint64_t m = 0; d * m <= 24; ++m) {
        auto got = collect_family(d, s, m);
        auto expected = dsum::test::brute_block_family(d, s, m);
        std::set<Partition> got_set(got.begin(), got.end());
        std::set<Partition> expected_set(expected.begin(), expected.end());
        CHECK(got.size() == got_set.size());
        CHECK(got_set == expected_set);
      }
    }
  }
}

TEST_CASE("block family spot checks") {
  CHECK(collect_family(2, 2, 2) == std::vector<Partition>{P({2, 2}), P({1, 1, 1, 1})});
  CHECK(collect_family(2, 1, 3) == std::vector<Partition>{P({3, 3})});
  for (std::uint32_t d : {1u, 2u, 5u})
    CHECK(collect_family(d, 3, 1) == std::vector<Partition>{inflate(P({1}), d)});
}

TEST_CASE("block family lengths are divisible by d") {
  for (std::uint32_t d : {2u, 3u})
    for (std::uint64_t m = 1; m <= 7; ++m) {
      BlockFamilyEnumerator en(d, 4, m);
      while (auto lambda = en.next()) CHECK(lambda->length() % d == 0);
    }
}

TEST_CASE("family_count is exact") {
  auto p = dsum::test::pentagonal_partition_counts(30);
  for (std::uint64_t m = 0; m <= 30; ++m)
    CHECK(family_count(40, m) == ExactCount(static_cast<long>(p[m])));
  CHECK(family_count(2, 100) == 51);
  CHECK(family_count(1, 100) == 1);
  CHECK_THROWS_AS(family_count(5, 50'000'000), BudgetError);
}

TEST_CASE("count estimates stay sane in the closed-form strips") {
  CHECK(count_partitions_atmost(1000, 1) == 1.0);
  CHECK(count_partitions_atmost(1000, 2) == 501.0);
  CHECK(count_partitions_atmost(9, 3) == 12.0);  // 12 partitions of 9 into <= 3 parts
  CHECK(count_partitions_atmost(1'000'000'000, 40) > 1e18);
}
