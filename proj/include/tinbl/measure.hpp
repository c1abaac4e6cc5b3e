#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tinbl/algebra.hpp"
#include "tinbl/rns.hpp"
#include "tinbl/signals.hpp"

namespace tinbl {

inline constexpr double kDefaultThreshold = 5.0;

/// Finite-N time average of a product of two signals, accumulated exactly.
///
/// The estimate passes when |mean - expected| <= threshold * spread / sqrt(n),
/// where spread bounds |a(t) b(t)|. The comparison is done in integers on
/// (sum - expected n)^2 <= threshold^2 spread^2 n, with the threshold rounded
/// to six decimals.
struct CorrelationEstimate {
  std::uint64_t n = 0;
  Integer sum = 0;
  Integer spread = 1;
  Integer expected = 0;
  double threshold = kDefaultThreshold;

  long double mean() const;
  /// Exact decimal rendering of sum / n rounded half away from zero.
  std::string mean_decimal(int digits = 9) const;
  long double standard_error() const;
  /// threshold * spread / sqrt(n).
  long double tolerance() const;
  bool pass() const;
};

/// <a(t) b(t)> over t in [0, n). Expected value 0; spread is the product of
/// the magnitude bounds of a and b.
CorrelationEstimate correlate(const SignalExpr& a, const SignalExpr& b, std::uint64_t n, const Rns& rns,
                              double threshold = kDefaultThreshold, unsigned threads = 0);

/// Pairwise rail correlations, indexed in Rns::rail_signs order.
struct OrthogonalityMatrix {
  std::size_t rails = 0;
  std::vector<CorrelationEstimate> entries;

  const CorrelationEstimate& at(std::size_t row, std::size_t col) const { return entries[row * rails + col]; }
  /// Diagonal entries equal to exactly 1 and every off-diagonal entry passing.
  bool all_pass() const;
  /// Off-diagonal (row, col) pairs with row < col that fail.
  std::vector<std::pair<std::size_t, std::size_t>> failures() const;
};

/// Diagonal entries expect 1, off-diagonal entries expect 0.
OrthogonalityMatrix orthogonality_matrix(const Rns& rns, std::uint64_t n, double threshold = kDefaultThreshold,
                                         unsigned threads = 0);

/// <y(t) W(t)> over n ticks. For an arbitrary signal the caller supplies the
/// expected coefficient; the spread is the magnitude bound of y.
CorrelationEstimate measure_coefficient(const SignalExpr& y, const ProductString& w, std::uint64_t n,
                                        const Rns& rns, const Integer& expected = 0,
                                        double threshold = kDefaultThreshold, unsigned threads = 0);

/// Same measurement on the compiled state, with the exact coefficient of w as
/// the expected value and the sum of |coefficients| as the spread.
CorrelationEstimate measure_coefficient(const Superposition& y, const ProductString& w, std::uint64_t n,
                                        const Rns& rns, double threshold = kDefaultThreshold,
                                        unsigned threads = 0);

}  // namespace tinbl
