#include "lfcd/metrics.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using lfcd::Partition;

namespace {

Partition make_partition(std::vector<std::uint32_t> ids) {
  return lfcd::canonical_partition(ids);
}

Partition random_partition(std::mt19937_64& rng, std::size_t n,
                           std::uint32_t max_groups) {
  std::vector<std::uint32_t> ids(n);
  for (auto& id : ids) {
    id = static_cast<std::uint32_t>(lfcd::uniform_below(rng, max_groups));
  }
  return lfcd::canonical_partition(ids);
}

}  // namespace

TEST_CASE("splitting a pair costs one") {
  const Partition truth = make_partition({0, 0, 1});
  const Partition pred = make_partition({0, 1, 2});
  CHECK(lfcd::pair_error(truth, pred) == 1);
}

TEST_CASE("merging two pairs costs four") {
  const Partition truth = make_partition({0, 0, 1, 1});
  const Partition pred = make_partition({0, 0, 0, 0});
  CHECK(lfcd::pair_error(truth, pred) == 4);
}

TEST_CASE("identical partitions score zero") {
  const Partition p = make_partition({0, 1, 0, 2, 1});
  CHECK(lfcd::pair_error(p, p) == 0);
}

TEST_CASE("pair_error rejects mismatched node sets") {
  const Partition a = make_partition({0, 0});
  const Partition b = make_partition({0, 0, 1});
  CHECK_THROWS_AS(lfcd::pair_error(a, b), lfcd::Error);
}

TEST_CASE("pair_error matches the disagreement-matrix oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + lfcd::uniform_below(rng, 30);
    const std::uint32_t groups =
        1 + static_cast<std::uint32_t>(lfcd::uniform_below(rng, 6));
    const Partition truth = random_partition(rng, n, groups);
    const Partition pred = random_partition(rng, n, groups);
    CHECK(lfcd::pair_error(truth, pred) ==
          oracle::pair_error_by_matrix(truth, pred));
  }
}

TEST_CASE("pair_error is symmetric and relabel-invariant") {
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + lfcd::uniform_below(rng, 25);
    const Partition a = random_partition(rng, n, 5);
    const Partition b = random_partition(rng, n, 5);
    const std::uint64_t error = lfcd::pair_error(a, b);
    CHECK(error == lfcd::pair_error(b, a));
    // Shuffle b's community numbering; co-membership is untouched.
    std::vector<std::uint32_t> shuffled(n);
    const std::uint32_t shift =
        1 + static_cast<std::uint32_t>(lfcd::uniform_below(rng, 7));
    for (std::size_t v = 0; v < n; ++v) {
      shuffled[v] = (b.community_of[v] + shift) * 13 + 5;
    }
    CHECK(lfcd::pair_error(a, lfcd::canonical_partition(shuffled)) == error);
  }
}

TEST_CASE("score report carries the counts") {
  const Partition truth = make_partition({0, 0, 1, 1});
  const Partition pred = make_partition({0, 0, 0, 0});
  const lfcd::ScoreReport report = lfcd::score(truth, pred);
  CHECK(report.pair_error == 4);
  CHECK(report.pred_communities == 1);
  CHECK(report.true_communities == 2);
  CHECK(report.node_count == 4);
  CHECK(lfcd::format_score(report) ==
        "pair_error=4 pred_k=1 true_k=2 n=4");
}
