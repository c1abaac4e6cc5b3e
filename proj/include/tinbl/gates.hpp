#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "tinbl/algebra.hpp"
#include "tinbl/rns.hpp"
#include "tinbl/signals.hpp"

namespace tinbl {

/// NOT_i on a symbolic state: multiplies bit i of every term by X.
/// H <-> L swap, X is annihilated to V, V creates an uncertain X.
/// Throws std::out_of_range unless 1 <= i <= M.
Superposition not_gate(std::size_t i, const Superposition& y);

/// NOT_i in instantaneous form: R_i0 * R_i1 * y.
SignalExpr not_gate_signal(std::size_t i, const SignalExpr& y);

// Single-bit gates. They take bare bit values rather than strings because
// they are only defined for one-bit systems.

/// A * B * L.
constexpr BitValue xor_single(BitValue a, BitValue b) noexcept { return a * b * BitValue::L; }
/// A * B * H.
constexpr BitValue xnor_single(BitValue a, BitValue b) noexcept { return a * b * BitValue::H; }

enum class BinaryGate { Xor, Xnor };

std::string_view gate_name(BinaryGate gate) noexcept;
/// "xor" or "xnor". Throws std::invalid_argument otherwise.
BinaryGate binary_gate_from_name(std::string_view name);

BitValue apply(BinaryGate gate, BitValue a, BitValue b) noexcept;

/// table[r][c] = gate(kTableOrder[r], kTableOrder[c]).
using TruthTable = std::array<std::array<BitValue, 4>, 4>;

TruthTable truth_table(BinaryGate gate);

/// The published tables, transcribed literally. Used as the reference for
/// checking truth_table().
TruthTable reference_truth_table(BinaryGate gate);

/// Outcome of applying a gate symbolically and checking the result against
/// the instantaneous construction over a tick window.
struct GateReport {
  std::string gate;
  std::string input;
  Superposition output{1};
  std::uint64_t ticks = 0;
  /// First tick at which the two forms disagreed, if any.
  std::uint64_t first_mismatch = 0;
  bool consistent = false;
};

/// NOT_i applied to y; consistency compares compile(not_gate(i, y)) with
/// not_gate_signal(i, compile(y)) at ticks [0, ticks).
GateReport run_not_gate(std::size_t i, const Superposition& y, std::uint64_t ticks, const Rns& rns);

/// Single-bit XOR/XNOR; `rns` must have M = 1. Consistency compares the
/// symbolic result's signal with A(t) B(t) L(t) (or H(t)) at ticks [0, ticks).
GateReport run_binary_gate(BinaryGate gate, BitValue a, BitValue b, std::uint64_t ticks, const Rns& rns);

}  // namespace tinbl
