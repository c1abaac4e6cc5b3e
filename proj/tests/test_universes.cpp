#include <gtest/gtest.h>

#include <map>
#include <set>

#include "tinbl/universes.hpp"

using namespace tinbl;

namespace {

constexpr UniverseKind kKinds[] = {UniverseKind::Binary, UniverseKind::TernaryNoVacuum, UniverseKind::Total};

Integer power(unsigned base, std::size_t exp) {
  Integer r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

std::uint64_t choose(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Sign assignment enumerated from the bits of `mask`: rail position p is +1
// when bit p is set.
class MaskSigns final : public SignSource {
 public:
  explicit MaskSigns(std::uint64_t mask) : mask_(mask) {}
  Sign sign(RtwId id) const override { return (mask_ >> Rns::rail_position(id)) & 1 ? 1 : -1; }

 private:
  std::uint64_t mask_;
};

TEST(Universe, RejectsZeroBits) {
  for (auto kind : kKinds) {
    EXPECT_THROW(build_universe(kind, 0), std::invalid_argument);
    EXPECT_THROW(expand_universe(kind, 0), std::invalid_argument);
  }
}

TEST(Universe, KindNames) {
  for (auto kind : kKinds) EXPECT_EQ(universe_kind_from_name(universe_name(kind)), kind);
  EXPECT_THROW(universe_kind_from_name("quaternary"), std::invalid_argument);
}

TEST(Universe, BinaryExpansionOnThreeBits) {
  const auto u = expand_universe(UniverseKind::Binary, 3);
  const std::set<std::string> expected{"LLL", "HLL", "LHL", "HHL", "LLH", "HLH", "LHH", "HHH"};
  std::set<std::string> got;
  for (const auto& [w, c] : u) {
    EXPECT_EQ(c, 1);
    got.insert(w.to_string());
  }
  EXPECT_EQ(got, expected);
}

TEST(Universe, TernaryExpansionHasNoVacuum) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const auto u = expand_universe(UniverseKind::TernaryNoVacuum, m);
    EXPECT_EQ(Integer(u.size()), power(3, m));
    for (const auto& [w, c] : u) {
      ASSERT_EQ(c, 1);
      for (BitValue v : w.values()) ASSERT_NE(v, BitValue::V);
    }
  }
}

TEST(Universe, TotalExpansionContainsSingleRailElements) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto u = expand_universe(UniverseKind::Total, m);
    EXPECT_EQ(Integer(u.size()), power(4, m));
    for (const auto& [w, c] : u) ASSERT_EQ(c, 1);
    EXPECT_EQ(u.coefficient(ProductString::vacuum(m)), 1);
    for (std::size_t i = 1; i <= m; ++i)
      for (BitValue v : {BitValue::L, BitValue::H, BitValue::X}) {
        auto w = ProductString::vacuum(m);
        w.set(i, v);
        EXPECT_EQ(u.coefficient(w), 1) << w.to_string();
      }
  }
}

TEST(Universe, ExpansionCap) {
  EXPECT_THROW(expand_universe(UniverseKind::Total, 20), ExpansionLimitError);
  EXPECT_THROW(expand_universe(UniverseKind::Binary, 5, 31), ExpansionLimitError);
  EXPECT_EQ(expand_universe(UniverseKind::Binary, 5, 32).size(), 32u);
  EXPECT_EQ(expanded_term_count(UniverseKind::Total, 31), 1ull << 62);
  EXPECT_EQ(expanded_term_count(UniverseKind::Total, 32), 0u);
}

TEST(Universe, FactorValuesOverAllSignPairs) {
  const int s[] = {-1, 1};
  for (int s0 : s)
    for (int s1 : s) {
      const bool both_plus = s0 == 1 && s1 == 1;
      EXPECT_EQ(factor_value(UniverseKind::TernaryNoVacuum, s0, s1), both_plus ? 3 : -1);
      EXPECT_EQ(factor_value(UniverseKind::Total, s0, s1), both_plus ? 4 : 0);
      EXPECT_EQ(factor_value(UniverseKind::Binary, s0, s1) == 0, s0 != s1);
    }
  EXPECT_EQ(factor_value(UniverseKind::Binary, 1, -1), 0);
}

TEST(Universe, FactorValueReadsTheNoiseSystem) {
  const Rns rns(4, 3);
  for (ClockIndex t = 0; t < 200; ++t)
    for (std::size_t i = 1; i <= 4; ++i)
      for (auto kind : kKinds)
        EXPECT_EQ(universe_factor_value(kind, i, t, rns),
                  factor_value(kind, rns.sign({i, 0}, t), rns.sign({i, 1}, t)));
}

// Brute force over all 2^(2m) sign configurations, evaluating the expanded
// superposition term by term. Confirms the closed-form laws used as
// expectations elsewhere.
TEST(Universe, AmplitudeLawsHoldOverEverySignConfiguration) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const std::uint64_t configs = 1ull << (2 * m);
    for (auto kind : kKinds) {
      const auto expanded = expand_universe(kind, m);
      const auto factored = build_universe(kind, m);
      std::map<Integer, std::uint64_t> histogram;
      std::uint64_t zeros = 0;
      for (std::uint64_t mask = 0; mask < configs; ++mask) {
        const MaskSigns signs(mask);
        const Amplitude a = eval_superposition(expanded, signs);
        ASSERT_EQ(a, eval(factored, signs));
        if (a == 0)
          ++zeros;
        else
          ++histogram[abs(a)];
      }
      switch (kind) {
        case UniverseKind::Binary:
          // Zero fraction 1 - 2^-m; nonzero amplitude 2^m.
          EXPECT_EQ(zeros, configs - (1ull << m));
          ASSERT_EQ(histogram.size(), 1u);
          EXPECT_EQ(histogram.begin()->first, power(2, m));
          break;
        case UniverseKind::TernaryNoVacuum:
          // Never zero; |amplitude| = 3^k with k ~ Binomial(m, 1/4).
          EXPECT_EQ(zeros, 0u);
          for (std::size_t k = 0; k <= m; ++k)
            EXPECT_EQ(histogram[power(3, k)], choose(m, k) * static_cast<std::uint64_t>(power(3, m - k)));
          EXPECT_EQ(histogram.size(), m + 1);
          break;
        case UniverseKind::Total:
          // Nonzero fraction 4^-m, amplitude 4^m.
          EXPECT_EQ(zeros, configs - 1);
          ASSERT_EQ(histogram.size(), 1u);
          EXPECT_EQ(histogram.begin()->first, power(4, m));
          break;
      }
    }
  }
}

TEST(Universe, FactoredEqualsExpandedOverTicks) {
  for (auto kind : kKinds) {
    const std::size_t max_m = kind == UniverseKind::Total ? 6 : 8;
    for (std::size_t m = 1; m <= max_m; ++m) {
      const Rns rns(m, 31 + m);
      const auto factored = build_universe(kind, m);
      const auto compiled = compile_superposition(expand_universe(kind, m));
      for (ClockIndex t = 0; t < 1000; ++t) ASSERT_EQ(eval(factored, t, rns), eval(compiled, t, rns));
    }
  }
}

TEST(Universe, NodeCountIsLinear) {
  for (std::size_t m : {1u, 10u, 100u, 1000u}) {
    EXPECT_EQ(node_count(build_universe(UniverseKind::Binary, m)), 3 * m + 1);
    EXPECT_EQ(node_count(build_universe(UniverseKind::TernaryNoVacuum, m)), 4 * m + 1);
    // The unit addend is a single shared node.
    EXPECT_EQ(node_count(build_universe(UniverseKind::Total, m)), 4 * m + 2);
  }
}

TEST(UniverseStats, TernaryNeverZero) {
  for (std::size_t m : {1u, 2u, 4u, 8u, 16u}) {
    const Rns rns(m, 1000 + m);
    const auto stats = universe_stats(UniverseKind::TernaryNoVacuum, m, 100'000, rns);
    EXPECT_EQ(stats.zero_count, 0u) << "m=" << m;
    for (const auto& [a, c] : stats.histogram) {
      bool is_power = false;
      for (std::size_t k = 0; k <= m; ++k) is_power = is_power || a == power(3, k);
      EXPECT_TRUE(is_power) << a;
    }
    for (const auto& check : check_universe_laws(stats, 5.0)) EXPECT_TRUE(check.pass) << check.name << ": " << check.detail;
  }
}

TEST(UniverseStats, BinaryZeroFraction) {
  const Rns rns(3, 17);
  const auto stats = universe_stats(UniverseKind::Binary, 3, 1'000'000, rns);
  EXPECT_TRUE(binomial_within(stats.zero_count, stats.ticks, 1 - 1.0L / 8, 5.0));
  for (const auto& check : check_universe_laws(stats, 5.0)) EXPECT_TRUE(check.pass) << check.name;
}

TEST(UniverseStats, TotalNonzeroFraction) {
  const Rns rns(4, 18);
  const auto stats = universe_stats(UniverseKind::Total, 4, 1'000'000, rns);
  EXPECT_TRUE(binomial_within(stats.ticks - stats.zero_count, stats.ticks, 1.0L / 256, 5.0));
  for (const auto& check : check_universe_laws(stats, 5.0)) EXPECT_TRUE(check.pass) << check.name;
}

TEST(UniverseStats, PartitionedTalliesMerge) {
  const Rns rns(5, 19);
  const auto serial = universe_stats(UniverseKind::TernaryNoVacuum, 5, 20'000, rns, 0, 1);
  EXPECT_EQ(universe_stats(UniverseKind::TernaryNoVacuum, 5, 20'000, rns, 0, 7), serial);
  auto merged = universe_stats(UniverseKind::TernaryNoVacuum, 5, 12'345, rns, 0, 1);
  merged.merge(universe_stats(UniverseKind::TernaryNoVacuum, 5, 20'000 - 12'345, rns, 12'345, 1));
  EXPECT_EQ(merged, serial);

  std::uint64_t tallied = serial.zero_count;
  for (const auto& [a, c] : serial.histogram) tallied += c;
  EXPECT_EQ(tallied, serial.ticks);
  for (const auto& p : serial.sign_pairs) EXPECT_EQ(p[0] + p[1] + p[2] + p[3], serial.ticks);
}

TEST(UniverseStats, RejectsBadArguments) {
  const Rns rns(3, 1);
  EXPECT_THROW(universe_stats(UniverseKind::Binary, 3, 0, rns), std::invalid_argument);
  EXPECT_THROW(universe_stats(UniverseKind::Binary, 4, 10, rns), std::invalid_argument);
}

TEST(UniverseLaws, DetectViolations) {
  const Rns rns(3, 2);
  auto stats = universe_stats(UniverseKind::TernaryNoVacuum, 3, 1000, rns);
  stats.zero_count += 1;
  stats.ticks += 1;
  bool never_zero_failed = false;
  for (const auto& c : check_universe_laws(stats, 5.0))
    if (c.name == "never_zero") never_zero_failed = !c.pass;
  EXPECT_TRUE(never_zero_failed);

  auto binary = universe_stats(UniverseKind::Binary, 3, 1000, rns);
  binary.histogram[Integer(4)] += 1;
  binary.ticks += 1;
  bool value_failed = false;
  for (const auto& c : check_universe_laws(binary, 5.0))
    if (c.name == "nonzero_value") value_failed = !c.pass;
  EXPECT_TRUE(value_failed);
}

TEST(ChiSquare, AcceptsExactAndRejectsSkewedCounts) {
  // Exact Binomial(4, 1/4) counts out of 256: 81, 108, 54, 12, 1.
  const auto exact = chi_square_binomial({81'000, 108'000, 54'000, 12'000, 1'000}, 4, 0.25, 5.0);
  EXPECT_TRUE(exact.pass);
  EXPECT_NEAR(exact.statistic, 0.0, 1e-9);
  const auto skewed = chi_square_binomial({100'000, 100'000, 50'000, 5'000, 1'000}, 4, 0.25, 5.0);
  EXPECT_FALSE(skewed.pass);
  EXPECT_THROW(chi_square_binomial({1, 2}, 4, 0.25, 5.0), std::invalid_argument);
}

}  // namespace
