#include "tinbl/algebra.hpp"

#include <cctype>

namespace tinbl {

char to_char(BitValue v) noexcept {
  switch (v) {
    case BitValue::V: return 'V';
    case BitValue::L: return 'L';
    case BitValue::H: return 'H';
    case BitValue::X: return 'X';
  }
  return '?';
}

BitValue bit_value_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'V': return BitValue::V;
    case 'L': return BitValue::L;
    case 'H': return BitValue::H;
    case 'X': return BitValue::X;
    default: break;
  }
  throw std::invalid_argument(std::string("not a bit value: '") + c + "'");
}

ProductString ProductString::parse(std::string_view text) {
  std::vector<BitValue> values;
  values.reserve(text.size());
  for (char c : text) values.push_back(bit_value_from_char(c));
  return ProductString(std::move(values));
}

BitValue ProductString::at(std::size_t bit) const {
  if (bit < 1 || bit > values_.size()) throw std::out_of_range("bit index outside product string");
  return values_[bit - 1];
}

void ProductString::set(std::size_t bit, BitValue v) {
  if (bit < 1 || bit > values_.size()) throw std::out_of_range("bit index outside product string");
  values_[bit - 1] = v;
}

std::string ProductString::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (BitValue v : values_) out.push_back(to_char(v));
  return out;
}

ProductString string_mul(const ProductString& a, const ProductString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("product strings differ in length");
  std::vector<BitValue> out(a.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.values()[k] * b.values()[k];
  return ProductString(std::move(out));
}

ProductString string_from_number(std::uint64_t n, std::size_t m) {
  if (m == 0 || (m < 64 && n >> m != 0))
    throw std::out_of_range(std::to_string(n) + " does not fit in " + std::to_string(m) + " bits");
  std::vector<BitValue> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = (k < 64 && (n >> k) & 1U) ? BitValue::H : BitValue::L;
  return ProductString(std::move(out));
}

Superposition Superposition::single(ProductString w, Integer coeff) {
  Superposition y(w.size());
  y.accumulate(w, coeff);
  return y;
}

Superposition Superposition::from_terms(std::size_t m,
                                        const std::vector<std::pair<ProductString, Integer>>& terms) {
  Superposition y(m);
  for (const auto& [w, c] : terms) y.accumulate(w, c);
  return y;
}

void Superposition::accumulate(const ProductString& w, const Integer& coeff) {
  if (w.size() != m_) throw std::invalid_argument("product string length does not match superposition");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Integer Superposition::coefficient(const ProductString& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

Superposition Superposition::scaled(const Integer& factor) const {
  Superposition out(m_);
  if (factor == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, c * factor);
  return out;
}

Integer Superposition::l1_norm() const {
  Integer total = 0;
  for (const auto& [w, c] : terms_) total += abs(c);
  return total;
}

Superposition superpose_add(const Superposition& a, const Superposition& b) {
  if (a.bits() != b.bits()) throw std::invalid_argument("superpositions differ in bit count");
  Superposition out = a;
  for (const auto& [w, c] : b) out.accumulate(w, c);
  return out;
}

Superposition superpose_mul(const Superposition& a, const Superposition& b, std::size_t cap) {
  if (a.bits() != b.bits()) throw std::invalid_argument("superpositions differ in bit count");
  if (!a.empty() && b.size() > cap / a.size())
    throw ExpansionLimitError("expansion of " + std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                              " terms exceeds the cap of " + std::to_string(cap));
  Superposition out(a.bits());
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) out.accumulate(string_mul(u, v), cu * cv);
  return out;
}

Integer coefficient(const Superposition& y, const ProductString& w) { return y.coefficient(w); }

}  // namespace tinbl
