#include "tinbl/gates.hpp"

#include <stdexcept>

namespace tinbl {

Superposition not_gate(std::size_t i, const Superposition& y) {
  if (i < 1 || i > y.bits()) throw std::out_of_range("NOT gate bit index outside [1, M]");
  Superposition out(y.bits());
  for (const auto& [w, c] : y) {
    ProductString flipped = w;
    flipped.set(i, w.at(i) * BitValue::X);
    out.accumulate(flipped, c);
  }
  return out;
}

SignalExpr not_gate_signal(std::size_t i, const SignalExpr& y) {
  if (i < 1) throw std::out_of_range("NOT gate bit index must be at least 1");
  return SignalExpr::product({SignalExpr::rail(i, 0), SignalExpr::rail(i, 1), y});
}

std::string_view gate_name(BinaryGate gate) noexcept { return gate == BinaryGate::Xor ? "xor" : "xnor"; }

BinaryGate binary_gate_from_name(std::string_view name) {
  if (name == "xor" || name == "XOR") return BinaryGate::Xor;
  if (name == "xnor" || name == "XNOR") return BinaryGate::Xnor;
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

BitValue apply(BinaryGate gate, BitValue a, BitValue b) noexcept {
  return gate == BinaryGate::Xor ? xor_single(a, b) : xnor_single(a, b);
}

TruthTable truth_table(BinaryGate gate) {
  TruthTable t{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) t[r][c] = apply(gate, kTableOrder[r], kTableOrder[c]);
  return t;
}

TruthTable reference_truth_table(BinaryGate gate) {
  // Rows and columns in L, H, X, V order.
  static constexpr std::array<const char*, 4> kXor{"LHXV", "HLVX", "XVLH", "VXHL"};
  static constexpr std::array<const char*, 4> kXnor{"HLVX", "LHXV", "VXHL", "XVLH"};
  const auto& rows = gate == BinaryGate::Xor ? kXor : kXnor;
  TruthTable t{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) t[r][c] = bit_value_from_char(rows[r][c]);
  return t;
}

GateReport run_not_gate(std::size_t i, const Superposition& y, std::uint64_t ticks, const Rns& rns) {
  if (y.bits() != rns.bits()) throw std::invalid_argument("state bit count does not match noise system");
  GateReport report;
  report.gate = "not_" + std::to_string(i);
  report.input = "superposition of " + std::to_string(y.size()) + " terms";
  report.output = not_gate(i, y);
  report.ticks = ticks;
  const SignalExpr symbolic = compile_superposition(report.output);
  const SignalExpr instantaneous = not_gate_signal(i, compile_superposition(y));
  report.consistent = true;
  for (std::uint64_t t = 0; t < ticks; ++t) {
    if (eval(symbolic, t, rns) != eval(instantaneous, t, rns)) {
      report.consistent = false;
      report.first_mismatch = t;
      break;
    }
  }
  return report;
}

GateReport run_binary_gate(BinaryGate gate, BitValue a, BitValue b, std::uint64_t ticks, const Rns& rns) {
  if (rns.bits() != 1) throw std::invalid_argument("single-bit gates need a one-bit noise system");
  GateReport report;
  report.gate = std::string(gate_name(gate));
  report.input = std::string{to_char(a), ' ', to_char(b)};
  const BitValue result = apply(gate, a, b);
  report.output = Superposition::single(ProductString({result}));
  report.ticks = ticks;
  const ProductString sa({a}), sb({b});
  const ProductString reference({gate == BinaryGate::Xor ? BitValue::L : BitValue::H});
  const ProductString out({result});
  report.consistent = true;
  for (std::uint64_t t = 0; t < ticks; ++t) {
    const Sign instantaneous = eval_string(sa, t, rns) * eval_string(sb, t, rns) * eval_string(reference, t, rns);
    if (eval_string(out, t, rns) != instantaneous) {
      report.consistent = false;
      report.first_mismatch = t;
      break;
    }
  }
  return report;
}

}  // namespace tinbl
