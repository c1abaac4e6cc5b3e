#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "tinbl/algebra.hpp"
#include "tinbl/gates.hpp"
#include "tinbl/measure.hpp"
#include "tinbl/signals.hpp"
#include "tinbl/universes.hpp"

namespace tinbl {

using Json = nlohmann::ordered_json;

/// Thrown for malformed serialized input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Superposition: {"m": M, "terms": [["LHH", "1"], ...]} in canonical order.
// Coefficients are decimal strings; plain JSON integers are accepted on input.
Json to_json(const Superposition& y);
Superposition superposition_from_json(const Json& j);

// CSV form: header "string,coefficient", one canonical term per row.
void write_superposition_csv(std::ostream& out, const Superposition& y);
Superposition read_superposition_csv(std::istream& in);

/// Reads either serialized form, detected from the first non-blank character.
Superposition parse_superposition(const std::string& text);

// Expression tree: {"tag": "rail", "bit": i, "rail": j} | {"tag": "unit"} |
// {"tag": "prod", "factors": [...]} | {"tag": "sum", "terms": [{"weight": "w", "expr": {...}}]}.
// Shared subexpressions are written out once per occurrence.
Json to_json(const SignalExpr& expr);
SignalExpr signal_from_json(const Json& j);

/// Header "t,amplitude", decimal amplitudes.
void write_waveform_csv(std::ostream& out, ClockIndex t0, const std::vector<Amplitude>& amplitudes);

Json to_json(const AmplitudeStats& stats);
/// Header "abs_amplitude,count"; zero amplitude is the first row.
void write_stats_csv(std::ostream& out, const AmplitudeStats& stats);

/// {"n", "mean", "threshold", "pass", "expected", "spread"}.
Json to_json(const CorrelationEstimate& e);

Json to_json(const TruthTable& table);
/// Aligned text grid with L, H, X, V row and column labels.
std::string render_truth_table(const TruthTable& table);

}  // namespace tinbl
