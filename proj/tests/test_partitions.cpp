#include <doctest.h>

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "entlab/measures.hpp"
#include "entlab/partitions.hpp"

using namespace entlab;

TEST_CASE("balanced family sizes match the binomial coefficient") {
  CHECK(PartitionFamily::balanced(10).size() == 252);
  CHECK(PartitionFamily::balanced(9).size() == 126);
  CHECK(PartitionFamily::balanced(4).size() == 6);
  for (int n = 2; n <= 16; ++n) {
    CHECK(PartitionFamily::balanced(n).size() == binomial(n, n / 2));
  }
}

TEST_CASE("balanced members have popcount [n/2], ascending mask order") {
  const auto fam = PartitionFamily::balanced(4);
  const std::vector<std::uint64_t> expected{0b0011, 0b0101, 0b0110,
                                            0b1001, 0b1010, 0b1100};
  REQUIRE(fam.size() == expected.size());
  for (std::uint64_t i = 0; i < fam.size(); ++i) {
    CHECK(fam.mask_at(i) == expected[i]);
  }
  const auto fam9 = PartitionFamily::balanced(9);
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < fam9.size(); ++i) {
    const std::uint64_t m = fam9.mask_at(i);
    CHECK(std::popcount(m) == 4);
    CHECK(m > prev);
    prev = m;
    CHECK(fam9.at(i).n_a() <= fam9.at(i).n_b());
  }
}

TEST_CASE("contiguous blocks enumerate by length then position") {
  const auto fam = PartitionFamily::contiguous(4, 2);
  const std::vector<std::uint64_t> expected{0b0001, 0b0010, 0b0100, 0b1000,
                                            0b0011, 0b0110, 0b1100};
  REQUIRE(fam.size() == expected.size());
  for (std::uint64_t i = 0; i < fam.size(); ++i) {
    CHECK(fam.mask_at(i) == expected[i]);
    CHECK(fam.block_length(i) == (i < 4 ? 1 : 2));
  }
  CHECK(PartitionFamily::contiguous(12, 6).size() == 57);
  CHECK(PartitionFamily::contiguous(10, 5).size() == 40);
  CHECK_THROWS_AS(PartitionFamily::contiguous(10, 6), std::invalid_argument);
}

TEST_CASE("iteration is deterministic and round-trips explicit lists") {
  const auto fam = PartitionFamily::balanced(6);
  std::vector<std::uint64_t> first, second;
  for (const auto& part : fam) first.push_back(part.mask_a());
  for (const auto& part : fam) second.push_back(part.mask_a());
  CHECK(first == second);

  const std::vector<std::uint64_t> masks{0b0101, 0b0011};
  const auto expl = PartitionFamily::from_masks(4, masks);
  REQUIRE(expl.size() == 2);
  CHECK(expl.mask_at(0) == 0b0101);
  CHECK(expl.mask_at(1) == 0b0011);
  CHECK_THROWS_AS(PartitionFamily::from_masks(4, {}), std::invalid_argument);
}

TEST_CASE("balanced purity multiset is complement-invariant for even n") {
  const PureState state = haar_random_state(6, 321);
  const auto fam = PartitionFamily::balanced(6);
  const std::uint64_t full = 63;
  std::map<std::uint64_t, double> by_mask;
  for (std::uint64_t i = 0; i < fam.size(); ++i) {
    by_mask[fam.mask_at(i)] = purity(state, fam.at(i));
  }
  for (const auto& [mask, p] : by_mask) {
    REQUIRE(by_mask.count(full ^ mask) == 1);
    CHECK(p == doctest::Approx(by_mask[full ^ mask]).epsilon(1e-12));
  }
}

TEST_CASE("out-of-range family indexing throws") {
  const auto fam = PartitionFamily::balanced(4);
  CHECK_THROWS_AS(fam.mask_at(6), std::invalid_argument);
  CHECK_THROWS_AS(fam.block_length(0), std::invalid_argument);
}
