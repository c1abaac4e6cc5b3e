#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tinbl/gates.hpp"
#include "tinbl/universes.hpp"

using namespace tinbl;
using tinbl::test::Rng;

namespace {

constexpr BitValue L = BitValue::L;
constexpr BitValue H = BitValue::H;
constexpr BitValue X = BitValue::X;
constexpr BitValue V = BitValue::V;

Superposition state(const char* s) { return Superposition::single(ProductString::parse(s)); }

TEST(NotGate, BinaryValuesSwap) {
  EXPECT_EQ(not_gate(2, state("LHH")), state("LLH"));
  EXPECT_EQ(not_gate(1, state("LHH")), state("HHH"));
}

TEST(NotGate, AnnihilatesUncertainAndCreatesFromVacuum) {
  EXPECT_EQ(not_gate(1, state("XHH")), state("VHH"));
  EXPECT_EQ(not_gate(1, state("VHH")), state("XHH"));
  EXPECT_EQ(not_gate(3, state("VVV")), state("VVX"));
}

TEST(NotGate, EveryValueAtEveryPosition) {
  const std::pair<BitValue, BitValue> cases[] = {{H, L}, {L, H}, {X, V}, {V, X}};
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t i = 1; i <= m; ++i)
      for (auto [in, out] : cases) {
        auto w = ProductString::vacuum(m);
        w.set(i, in);
        auto expected = w;
        expected.set(i, out);
        EXPECT_EQ(not_gate(i, Superposition::single(w, -7)), Superposition::single(expected, -7));
      }
}

TEST(NotGate, InvolutionAndLinearity) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const std::size_t i = 1 + trial % m;
    const auto a = test::random_superposition(rng, m, 20);
    const auto b = test::random_superposition(rng, m, 20);
    EXPECT_EQ(not_gate(i, not_gate(i, a)), a);
    EXPECT_EQ(not_gate(i, a + b), not_gate(i, a) + not_gate(i, b));
    EXPECT_EQ(not_gate(i, a).size(), a.size());
  }
}

TEST(NotGate, RejectsBitOutsideState) {
  EXPECT_THROW(not_gate(0, state("LH")), std::out_of_range);
  EXPECT_THROW(not_gate(3, state("LH")), std::out_of_range);
  EXPECT_THROW(not_gate_signal(0, SignalExpr::unit()), std::out_of_range);
}

TEST(NotGateSignal, AgreesWithSymbolicGate) {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + trial % 6;
    const std::size_t i = 1 + trial % m;
    const Rns rns(m, trial);
    const auto y = test::random_superposition(rng, m, 16);
    const auto report = run_not_gate(i, y, 1000, rns);
    EXPECT_TRUE(report.consistent) << "first mismatch at " << report.first_mismatch;
    EXPECT_EQ(report.output, not_gate(i, y));
  }
}

TEST(NotGateSignal, TwiceIsIdentity) {
  Rng rng(23);
  const Rns rns(3, 5);
  const auto y = compile_superposition(test::random_superposition(rng, 3, 10));
  const auto twice = not_gate_signal(2, not_gate_signal(2, y));
  for (ClockIndex t = 0; t < 1000; ++t) EXPECT_EQ(eval(twice, t, rns), eval(y, t, rns));
}

TEST(NotGateSignal, KeepsTernaryUniverseNonzero) {
  const Rns rns(8, 6);
  const auto u = not_gate_signal(3, build_universe(UniverseKind::TernaryNoVacuum, 8));
  for (ClockIndex t = 0; t < 10000; ++t) EXPECT_NE(eval(u, t, rns), 0);
}

TEST(SingleBitGates, NamedEntries) {
  EXPECT_EQ(xor_single(H, H), L);
  EXPECT_EQ(xor_single(H, X), V);
  EXPECT_EQ(xor_single(X, X), L);
  EXPECT_EQ(xor_single(V, V), L);
  EXPECT_EQ(xnor_single(L, L), H);
  EXPECT_EQ(xnor_single(X, H), X);
  EXPECT_EQ(xnor_single(V, X), L);
}

TEST(SingleBitGates, TablesMatchPublishedTables) {
  for (BinaryGate g : {BinaryGate::Xor, BinaryGate::Xnor}) {
    const auto computed = truth_table(g);
    const auto reference = reference_truth_table(g);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c)
        EXPECT_EQ(computed[r][c], reference[r][c]) << gate_name(g) << " row " << r << " col " << c;
  }
}

TEST(SingleBitGates, XnorIsXorFollowedByNot) {
  const auto x = truth_table(BinaryGate::Xor);
  const auto n = truth_table(BinaryGate::Xnor);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(n[r][c], x[r][c] * X);
}

TEST(SingleBitGates, ClassicalOnBinaryInputs) {
  auto bit = [](BitValue v) { return v == H ? 1 : 0; };
  for (BitValue a : {L, H})
    for (BitValue b : {L, H}) {
      EXPECT_EQ(bit(xor_single(a, b)), bit(a) ^ bit(b));
      EXPECT_EQ(bit(xnor_single(a, b)), 1 - (bit(a) ^ bit(b)));
    }
  EXPECT_EQ(not_gate(1, state("L")), state("H"));
  EXPECT_EQ(not_gate(1, state("H")), state("L"));
}

TEST(SingleBitGates, InstantaneousConstructionAgrees) {
  const Rns rns(1, 77);
  for (BinaryGate g : {BinaryGate::Xor, BinaryGate::Xnor})
    for (BitValue a : kTableOrder)
      for (BitValue b : kTableOrder) {
        const auto report = run_binary_gate(g, a, b, 1000, rns);
        EXPECT_TRUE(report.consistent);
        EXPECT_EQ(report.output, Superposition::single(ProductString({apply(g, a, b)})));
      }
  EXPECT_THROW(run_binary_gate(BinaryGate::Xor, L, H, 10, Rns(2, 1)), std::invalid_argument);
}

TEST(SingleBitGates, Names) {
  EXPECT_EQ(binary_gate_from_name("xor"), BinaryGate::Xor);
  EXPECT_EQ(binary_gate_from_name("XNOR"), BinaryGate::Xnor);
  EXPECT_THROW(binary_gate_from_name("and"), std::invalid_argument);
}

}  // namespace
