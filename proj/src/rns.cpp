#include "tinbl/rns.hpp"

#include <stdexcept>
#include <string>

namespace tinbl {
namespace {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t tick_key(ClockIndex t) noexcept { return mix64(t * kGolden + 0xd1b54a32d192ed03ULL); }

}  // namespace

Rns::Rns(std::size_t m, std::uint64_t seed) : m_(m), seed_(seed) {
  if (m == 0) throw std::invalid_argument("reference noise system needs at least one bit");
}

Sign Rns::stream_sign(std::size_t stream, std::uint64_t tkey) const noexcept {
  const std::uint64_t key = mix64(seed_ + (static_cast<std::uint64_t>(stream) + 1) * kGolden);
  return (mix64(key ^ tkey) >> 63) ? 1 : -1;
}

Sign Rns::sign(RtwId id, ClockIndex t) const {
  if (id.bit < 1 || id.bit > m_)
    throw std::out_of_range("bit index " + std::to_string(id.bit) + " outside [1, " + std::to_string(m_) + "]");
  if (id.rail > 1) throw std::out_of_range("rail index must be 0 or 1");
  return stream_sign(rail_position(id), tick_key(t));
}

std::vector<Sign> Rns::rail_signs(ClockIndex t) const {
  const std::uint64_t tkey = tick_key(t);
  std::vector<Sign> out(2 * m_);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = stream_sign(s, tkey);
  return out;
}

}  // namespace tinbl
