#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tinbl {

/// Exact signed integer used for coefficients and amplitudes.
using Integer = boost::multiprecision::cpp_int;

/// Per-bit logic value. The numeric encoding is the pair of rails present in
/// the factor (bit 0: L-rail, bit 1: H-rail), so multiplication is XOR of the
/// encodings and the enumerator order V < L < H < X is the canonical order.
enum class BitValue : std::uint8_t {
  V = 0,  // vacuum: constant 1
  L = 1,  // R_i0
  H = 2,  // R_i1
  X = 3,  // R_i0 * R_i1, the uncertain value
};

/// Row/column order used by the truth tables.
inline constexpr std::array<BitValue, 4> kTableOrder{BitValue::L, BitValue::H, BitValue::X, BitValue::V};

/// Klein four-group product with identity V.
constexpr BitValue bv_mul(BitValue a, BitValue b) noexcept {
  return static_cast<BitValue>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr BitValue operator*(BitValue a, BitValue b) noexcept { return bv_mul(a, b); }

char to_char(BitValue v) noexcept;
/// Accepts L, H, X, V (case-insensitive). Throws std::invalid_argument otherwise.
BitValue bit_value_from_char(char c);

/// Thrown when an operation would produce more terms than allowed.
class ExpansionLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultExpansionCap = std::size_t{1} << 20;

/// An M-vector of bit values, position 1 being the least significant bit.
/// Symbolic form of one product of reference noises.
class ProductString {
 public:
  ProductString() = default;
  explicit ProductString(std::vector<BitValue> values) : values_(std::move(values)) {}

  /// The all-V string of length m.
  static ProductString vacuum(std::size_t m) { return ProductString(std::vector<BitValue>(m, BitValue::V)); }

  /// Parses the compact alphabet form, position 1 leftmost ("LHH" is 6 for M = 3).
  static ProductString parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }

  /// 1-based access by bit significance.
  BitValue at(std::size_t bit) const;
  void set(std::size_t bit, BitValue v);

  const std::vector<BitValue>& values() const noexcept { return values_; }
  std::string to_string() const;

  friend auto operator<=>(const ProductString&, const ProductString&) = default;

 private:
  std::vector<BitValue> values_;
};

/// Position-wise bv_mul. Throws std::invalid_argument on length mismatch.
ProductString string_mul(const ProductString& a, const ProductString& b);

/// Binary encoding of n on m bits: set bits map to H, clear bits to L.
/// Throws std::out_of_range unless n < 2^m.
ProductString string_from_number(std::uint64_t n, std::size_t m);

/// Exact symbolic state: product strings with nonzero integer coefficients,
/// iterated in canonical order. The empty state is the additive zero.
class Superposition {
 public:
  using Terms = std::map<ProductString, Integer>;
  using const_iterator = Terms::const_iterator;

  explicit Superposition(std::size_t m) : m_(m) {}

  static Superposition single(ProductString w, Integer coeff = 1);

  /// Collects like terms and drops zeros. Every string must have length m.
  static Superposition from_terms(std::size_t m, const std::vector<std::pair<ProductString, Integer>>& terms);

  std::size_t bits() const noexcept { return m_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }

  /// Adds `coeff` to the coefficient of w, erasing the entry if it cancels.
  void accumulate(const ProductString& w, const Integer& coeff);

  /// Stored coefficient of w, or 0.
  Integer coefficient(const ProductString& w) const;

  Superposition scaled(const Integer& factor) const;

  /// Sum of absolute coefficients.
  Integer l1_norm() const;

  friend bool operator==(const Superposition&, const Superposition&) = default;

 private:
  std::size_t m_;
  Terms terms_;
};

Superposition superpose_add(const Superposition& a, const Superposition& b);

/// Fully distributed product. Throws ExpansionLimitError when |a|*|b|, the
/// bound on the number of output terms, exceeds `cap`.
Superposition superpose_mul(const Superposition& a, const Superposition& b,
                            std::size_t cap = kDefaultExpansionCap);

Integer coefficient(const Superposition& y, const ProductString& w);

inline Superposition operator+(const Superposition& a, const Superposition& b) { return superpose_add(a, b); }
inline Superposition operator*(const Superposition& a, const Superposition& b) { return superpose_mul(a, b); }

}  // namespace tinbl
