#include "tinbl/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "tinbl/parallel.hpp"

namespace tinbl {
namespace {

constexpr std::int64_t kThresholdScale = 1'000'000;

Integer scaled_threshold(double threshold) {
  if (!(threshold >= 0) || !std::isfinite(threshold)) throw std::invalid_argument("threshold must be a finite non-negative number");
  return Integer(std::llround(threshold * kThresholdScale));
}

template <class Product>
Integer accumulate(std::uint64_t n, unsigned threads, Product product) {
  if (n == 0) throw std::invalid_argument("tick count must be at least 1");
  auto parts = map_chunks<Integer>(n, threads, [&](std::uint64_t begin, std::uint64_t end) {
    Integer s = 0;
    for (std::uint64_t t = begin; t < end; ++t) s += product(t);
    return s;
  });
  Integer total = 0;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

long double CorrelationEstimate::mean() const {
  return static_cast<long double>(sum) / static_cast<long double>(n);
}

std::string CorrelationEstimate::mean_decimal(int digits) const {
  Integer scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  const bool negative = sum < 0;
  const Integer magnitude = abs(sum);
  // Round half away from zero at `digits` fractional places.
  const Integer scaled = (magnitude * scale * 2 + Integer(n)) / (Integer(n) * 2);
  const Integer whole = scaled / scale;
  std::string frac = Integer(scaled % scale).str();
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (digits > 0) out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  return out;
}

long double CorrelationEstimate::standard_error() const {
  return static_cast<long double>(spread) / std::sqrt(static_cast<long double>(n));
}

long double CorrelationEstimate::tolerance() const { return threshold * standard_error(); }

bool CorrelationEstimate::pass() const {
  const Integer deviation = sum - expected * Integer(n);
  const Integer scale = kThresholdScale;
  const Integer k = scaled_threshold(threshold);
  return deviation * deviation * scale * scale <= k * k * spread * spread * Integer(n);
}

CorrelationEstimate correlate(const SignalExpr& a, const SignalExpr& b, std::uint64_t n, const Rns& rns,
                              double threshold, unsigned threads) {
  CorrelationEstimate e;
  e.n = n;
  e.threshold = threshold;
  e.spread = magnitude_bound(a) * magnitude_bound(b);
  e.sum = accumulate(n, threads, [&](ClockIndex t) { return eval(a, t, rns) * eval(b, t, rns); });
  return e;
}

bool OrthogonalityMatrix::all_pass() const {
  for (std::size_t r = 0; r < rails; ++r) {
    const auto& d = at(r, r);
    if (d.sum != Integer(d.n)) return false;
  }
  return failures().empty();
}

std::vector<std::pair<std::size_t, std::size_t>> OrthogonalityMatrix::failures() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < rails; ++r)
    for (std::size_t c = r + 1; c < rails; ++c)
      if (!at(r, c).pass()) out.emplace_back(r, c);
  return out;
}

OrthogonalityMatrix orthogonality_matrix(const Rns& rns, std::uint64_t n, double threshold, unsigned threads) {
  if (n == 0) throw std::invalid_argument("tick count must be at least 1");
  const std::size_t rails = 2 * rns.bits();
  // Upper-triangle sums including the diagonal, row-major.
  using Sums = std::vector<std::int64_t>;
  auto parts = map_chunks<Sums>(n, threads, [&](std::uint64_t begin, std::uint64_t end) {
    Sums sums(rails * rails, 0);
    for (ClockIndex t = begin; t < end; ++t) {
      const std::vector<Sign> s = rns.rail_signs(t);
      for (std::size_t r = 0; r < rails; ++r)
        for (std::size_t c = r; c < rails; ++c) sums[r * rails + c] += s[r] * s[c];
    }
    return sums;
  });
  OrthogonalityMatrix m;
  m.rails = rails;
  m.entries.resize(rails * rails);
  for (std::size_t r = 0; r < rails; ++r) {
    for (std::size_t c = r; c < rails; ++c) {
      Integer total = 0;
      for (const auto& p : parts) total += p[r * rails + c];
      CorrelationEstimate e;
      e.n = n;
      e.sum = total;
      e.expected = r == c ? 1 : 0;
      e.threshold = threshold;
      m.entries[r * rails + c] = e;
      m.entries[c * rails + r] = e;
    }
  }
  return m;
}

CorrelationEstimate measure_coefficient(const SignalExpr& y, const ProductString& w, std::uint64_t n,
                                        const Rns& rns, const Integer& expected, double threshold,
                                        unsigned threads) {
  if (w.size() != rns.bits()) throw std::invalid_argument("product string length does not match noise system");
  CorrelationEstimate e;
  e.n = n;
  e.threshold = threshold;
  e.expected = expected;
  e.spread = magnitude_bound(y);
  e.sum = accumulate(n, threads, [&](ClockIndex t) {
    const Amplitude a = eval(y, t, rns);
    return eval_string(w, t, rns) > 0 ? a : Amplitude(-a);
  });
  return e;
}

CorrelationEstimate measure_coefficient(const Superposition& y, const ProductString& w, std::uint64_t n,
                                        const Rns& rns, double threshold, unsigned threads) {
  if (y.bits() != w.size()) throw std::invalid_argument("product string length does not match state");
  CorrelationEstimate e =
      measure_coefficient(compile_superposition(y), w, n, rns, coefficient(y, w), threshold, threads);
  e.spread = y.l1_norm();
  return e;
}

}  // namespace tinbl
