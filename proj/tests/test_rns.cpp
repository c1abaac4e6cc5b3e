#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tinbl/rns.hpp"

using namespace tinbl;

namespace {

constexpr std::uint64_t kTicks = 1'000'000;

TEST(Rns, RejectsZeroBits) { EXPECT_THROW(Rns(0, 1), std::invalid_argument); }

TEST(Rns, AcceptsQueriesInsideConfiguredBits) {
  const Rns rns(3, 42);
  EXPECT_EQ(rns.bits(), 3u);
  for (std::size_t i = 1; i <= 3; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      const Sign s = rns.sign({i, j}, 17);
      EXPECT_TRUE(s == 1 || s == -1);
    }
  EXPECT_THROW(rns.sign({0, 0}, 0), std::out_of_range);
  EXPECT_THROW(rns.sign({4, 0}, 0), std::out_of_range);
  EXPECT_THROW(rns.sign({1, 2}, 0), std::out_of_range);
}

TEST(Rns, QueriesArePure) {
  const Rns a(3, 42);
  const Rns b(3, 42);
  // Reverse order on the second handle: no sequential state may leak in.
  std::vector<Sign> forward, backward;
  for (ClockIndex t = 0; t < 1000; ++t) forward.push_back(a.sign({2, 1}, t));
  for (ClockIndex t = 1000; t-- > 0;) backward.push_back(b.sign({2, 1}, t));
  std::reverse(backward.begin(), backward.end());
  EXPECT_EQ(forward, backward);
  EXPECT_EQ(a.sign({3, 0}, 123456789), a.sign({3, 0}, 123456789));
}

TEST(Rns, StreamsAreFrozenAcrossBuilds) {
  // Replay contract: these values must never change for seed 42.
  const Rns rns(1, 42);
  const std::vector<Sign> low{1, -1, -1, -1, -1, -1, 1, 1};
  const std::vector<Sign> high{1, -1, -1, -1, 1, -1, -1, -1};
  for (ClockIndex t = 0; t < 8; ++t) {
    EXPECT_EQ(rns.sign({1, 0}, t), low[t]) << "t=" << t;
    EXPECT_EQ(rns.sign({1, 1}, t), high[t]) << "t=" << t;
  }
}

TEST(Rns, SignDoesNotDependOnBitCount) {
  const Rns small(2, 7);
  const Rns large(64, 7);
  for (ClockIndex t = 0; t < 100; ++t) EXPECT_EQ(small.sign({2, 1}, t), large.sign({2, 1}, t));
}

TEST(Rns, SeedsGiveDifferentStreams) {
  const Rns a(1, 1);
  const Rns b(1, 2);
  int agree = 0;
  for (ClockIndex t = 0; t < 1000; ++t) agree += a.sign({1, 0}, t) == b.sign({1, 0}, t);
  EXPECT_GT(agree, 400);
  EXPECT_LT(agree, 600);
}

TEST(Rns, RailSignsLayoutMatchesSign) {
  const Rns rns(5, 9);
  for (ClockIndex t : {0ull, 1ull, 999ull, 1ull << 40}) {
    const auto v = rns.rail_signs(t);
    ASSERT_EQ(v.size(), 10u);
    for (std::size_t i = 1; i <= 5; ++i)
      for (unsigned j = 0; j < 2; ++j) EXPECT_EQ(v[2 * (i - 1) + j], rns.sign({i, j}, t));
  }
}

TEST(Rns, EveryRailIsUnbiased) {
  const Rns rns(3, 42);
  const double bound = 5.0 / std::sqrt(static_cast<double>(kTicks));
  for (std::size_t i = 1; i <= 3; ++i)
    for (unsigned j = 0; j < 2; ++j) {
      long long sum = 0;
      for (ClockIndex t = 0; t < kTicks; ++t) sum += rns.sign({i, j}, t);
      EXPECT_LE(std::fabs(static_cast<double>(sum) / kTicks), bound) << "rail " << i << "_" << j;
    }
}

TEST(Rns, DistinctRailsAreUncorrelated) {
  const Rns rns(3, 42);
  const double bound = 5.0 / std::sqrt(static_cast<double>(kTicks));
  long long sum = 0;
  for (ClockIndex t = 0; t < kTicks; ++t) sum += rns.sign({1, 0}, t) * rns.sign({2, 1}, t);
  EXPECT_LE(std::fabs(static_cast<double>(sum) / kTicks), bound);
  sum = 0;
  for (ClockIndex t = 0; t < kTicks; ++t) sum += rns.sign({3, 0}, t) * rns.sign({3, 1}, t);
  EXPECT_LE(std::fabs(static_cast<double>(sum) / kTicks), bound);
}

TEST(Rns, ConsecutiveTicksAreUncorrelated) {
  const Rns rns(1, 42);
  long long sum = 0;
  for (ClockIndex t = 0; t < kTicks; ++t) sum += rns.sign({1, 0}, t) * rns.sign({1, 0}, t + 1);
  EXPECT_LE(std::fabs(static_cast<double>(sum) / kTicks), 5.0 / std::sqrt(static_cast<double>(kTicks)));
}

TEST(Rns, DifferentTicksRarelyAgreeEverywhere) {
  // Full agreement of all 2M = 6 signs has probability 2^-6 per tick pair.
  const Rns rns(3, 42);
  const int pairs = 20'000;
  int full = 0;
  for (int k = 0; k < pairs; ++k) full += rns.rail_signs(2 * k) == rns.rail_signs(2 * k + 1);
  const double p = 1.0 / 64;
  EXPECT_LE(std::fabs(full - pairs * p), 5 * std::sqrt(pairs * p * (1 - p)));
  // With M = 16 the probability is 2^-32: no pair should agree.
  const Rns wide(16, 42);
  for (int k = 0; k < 1000; ++k) EXPECT_NE(wide.rail_signs(k), wide.rail_signs(k + 1000));
}

}  // namespace
