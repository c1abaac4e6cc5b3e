#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tinbl/algebra.hpp"
#include "tinbl/rns.hpp"
#include "tinbl/signals.hpp"

namespace tinbl {

/// Binary:          prod_i (R_i0 + R_i1)
/// TernaryNoVacuum: prod_i (R_i0 + R_i1 + R_i0 R_i1)
/// Total:           prod_i (R_i0 + R_i1 + R_i0 R_i1 + 1)
enum class UniverseKind { Binary, TernaryNoVacuum, Total };

/// "binary", "ternary-nv", "total".
std::string_view universe_name(UniverseKind kind) noexcept;
UniverseKind universe_kind_from_name(std::string_view name);

/// Addends per bit factor: 2, 3 or 4.
std::size_t terms_per_factor(UniverseKind kind) noexcept;

/// Bit values appearing in one factor, in canonical order.
std::vector<BitValue> factor_values(UniverseKind kind);

/// Factored universe over m bits: a product of m sums. Node count is linear in m.
/// Throws std::invalid_argument when m == 0.
SignalExpr build_universe(UniverseKind kind, std::size_t m);

/// Value of a single factor for rail signs (s0, s1).
constexpr int factor_value(UniverseKind kind, Sign s0, Sign s1) noexcept {
  switch (kind) {
    case UniverseKind::Binary: return s0 + s1;
    case UniverseKind::TernaryNoVacuum: return s0 + s1 + s0 * s1;
    case UniverseKind::Total: return s0 + s1 + s0 * s1 + 1;
  }
  return 0;
}

/// Factor i of the universe at tick t.
Amplitude universe_factor_value(UniverseKind kind, std::size_t i, ClockIndex t, const Rns& rns);

/// Tallies of the universe amplitude over a tick window.
struct AmplitudeStats {
  UniverseKind kind = UniverseKind::Binary;
  std::size_t m = 0;
  std::uint64_t ticks = 0;
  std::uint64_t zero_count = 0;
  /// Nonzero |amplitude| -> number of ticks.
  std::map<Integer, std::uint64_t> histogram;
  /// Per bit, counts of the rail sign pairs in the order (-,-), (-,+), (+,-), (+,+).
  std::vector<std::array<std::uint64_t, 4>> sign_pairs;
  /// both_plus[k] = number of ticks with exactly k bits whose rails are both +1.
  std::vector<std::uint64_t> both_plus;

  void merge(const AmplitudeStats& other);
  friend bool operator==(const AmplitudeStats&, const AmplitudeStats&) = default;
};

/// Evaluates the factored universe at ticks [t0, t0 + n). Throws
/// std::invalid_argument when n == 0 or m does not match the noise system.
AmplitudeStats universe_stats(UniverseKind kind, std::size_t m, std::uint64_t n, const Rns& rns,
                              ClockIndex t0 = 0, unsigned threads = 0);

/// Number of product strings in the expanded universe; 0 when it does not
/// fit in 64 bits.
std::uint64_t expanded_term_count(UniverseKind kind, std::size_t m) noexcept;

/// Exact symbolic expansion. Throws ExpansionLimitError when the term count
/// exceeds `cap`.
Superposition expand_universe(UniverseKind kind, std::size_t m, std::size_t cap = kDefaultExpansionCap);

/// Pearson chi-square goodness of fit of `counts[k]` against Binomial(m, p).
/// Tail bins with expected count below 5 are pooled into their neighbour.
/// The test passes when the upper-tail probability exceeds the two-sided
/// normal tail at `sigmas` standard deviations.
struct ChiSquareResult {
  double statistic = 0;
  std::size_t dof = 0;
  double critical = 0;
  bool pass = false;
};
ChiSquareResult chi_square_binomial(const std::vector<std::uint64_t>& counts, std::size_t m, double p,
                                    double sigmas);

/// |successes - n p| <= sigmas * sqrt(n p (1 - p)).
bool binomial_within(std::uint64_t successes, std::uint64_t n, long double p, double sigmas);

struct LawCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Checks the amplitude laws of the universe kind against the tallies:
///  - every kind: tallies are consistent (zero count plus histogram equals ticks);
///  - binary: nonzero amplitudes are exactly 2^m, zero fraction matches 1 - 2^-m;
///  - ternary-nv: no zeros, |amplitude| = 3^k with k the number of bits whose
///    rails are both +1, and k ~ Binomial(m, 1/4);
///  - total: nonzero amplitudes are exactly 4^m and occur exactly when all
///    bits have both rails +1, nonzero fraction matches 4^-m.
/// Statistical checks use `sigmas` as the tolerance.
std::vector<LawCheck> check_universe_laws(const AmplitudeStats& stats, double sigmas);

}  // namespace tinbl
