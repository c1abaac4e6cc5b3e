#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tinbl {

/// Clock-period ordinal. The amplitude of every reference noise is constant
/// within one period, so there is no finer time resolution.
using ClockIndex = std::uint64_t;

/// Instantaneous amplitude of one reference rail: -1 or +1.
using Sign = int;

/// One of the 2M reference random telegraph waves. `bit` is the 1-based
/// bit-significance index, `rail` is 0 for the L-rail and 1 for the H-rail.
struct RtwId {
  std::size_t bit = 1;
  unsigned rail = 0;

  friend auto operator<=>(const RtwId&, const RtwId&) = default;
};

/// Reference Noise System: 2M independent, unbiased clocked RTW sign streams.
///
/// Signs are produced by a counter-based generator keyed by
/// (seed, bit, rail, t), so every query is a pure function of its arguments
/// and any tick can be read without generating the ones before it.
/// Instances are immutable and can be shared freely between threads.
class Rns {
 public:
  /// Throws std::invalid_argument when m == 0.
  Rns(std::size_t m, std::uint64_t seed);

  std::size_t bits() const noexcept { return m_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Throws std::out_of_range for a bit outside [1, M] or a rail other than 0/1.
  Sign sign(RtwId id, ClockIndex t) const;

  /// All 2M signs at tick t, ordered (1,0), (1,1), (2,0), ..., (M,1).
  std::vector<Sign> rail_signs(ClockIndex t) const;

  /// Position of `id` in the rail_signs() ordering.
  static std::size_t rail_position(RtwId id) noexcept { return 2 * (id.bit - 1) + id.rail; }

 private:
  Sign stream_sign(std::size_t stream, std::uint64_t tick_key) const noexcept;

  std::size_t m_;
  std::uint64_t seed_;
};

}  // namespace tinbl
