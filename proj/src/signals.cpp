#include "tinbl/signals.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tinbl/parallel.hpp"

namespace tinbl {

struct SignalExpr::Node {
  NodeKind kind = NodeKind::Unit;
  RtwId rail{};
  std::vector<SignalExpr> children;
  std::vector<Integer> weights;
  // Machine-word copies of the weights; valid when small_weights_ok.
  std::vector<std::int64_t> small_weights;
  bool small_weights_ok = true;
};

namespace {

const std::shared_ptr<const SignalExpr::Node>& unit_node() {
  static const auto node = std::make_shared<const SignalExpr::Node>();
  return node;
}

const std::vector<SignalExpr> kNoChildren;
const std::vector<Integer> kNoWeights;

bool fits_int64(const Integer& v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

SignalExpr::SignalExpr() : node_(unit_node()) {}

SignalExpr SignalExpr::rail(RtwId id) {
  if (id.bit < 1) throw std::out_of_range("bit index must be at least 1");
  if (id.rail > 1) throw std::out_of_range("rail index must be 0 or 1");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Rail;
  node->rail = id;
  return SignalExpr(std::move(node));
}

SignalExpr SignalExpr::rail(std::size_t bit, unsigned rail) { return SignalExpr::rail(RtwId{bit, rail}); }

SignalExpr SignalExpr::product(std::vector<SignalExpr> factors) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Product;
  node->children = std::move(factors);
  return SignalExpr(std::move(node));
}

SignalExpr SignalExpr::sum(std::vector<std::pair<Integer, SignalExpr>> terms) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Sum;
  node->children.reserve(terms.size());
  node->weights.reserve(terms.size());
  for (auto& [w, e] : terms) {
    node->small_weights_ok = node->small_weights_ok && fits_int64(w);
    node->small_weights.push_back(node->small_weights_ok ? static_cast<std::int64_t>(w) : 0);
    node->weights.push_back(std::move(w));
    node->children.push_back(std::move(e));
  }
  return SignalExpr(std::move(node));
}

NodeKind SignalExpr::kind() const noexcept { return node_->kind; }
RtwId SignalExpr::rail_id() const noexcept { return node_->rail; }
const std::vector<SignalExpr>& SignalExpr::children() const noexcept { return node_->children; }
const std::vector<Integer>& SignalExpr::weights() const noexcept {
  return node_->kind == NodeKind::Sum ? node_->weights : kNoWeights;
}

namespace {

template <class Visit>
void visit_unique(const SignalExpr& root, Visit visit) {
  std::unordered_set<const void*> seen;
  std::vector<const SignalExpr*> stack{&root};
  while (!stack.empty()) {
    const SignalExpr* e = stack.back();
    stack.pop_back();
    if (!seen.insert(e->identity()).second) continue;
    visit(*e);
    for (const auto& c : e->children()) stack.push_back(&c);
  }
}

}  // namespace

std::size_t node_count(const SignalExpr& expr) {
  std::size_t count = 0;
  visit_unique(expr, [&](const SignalExpr&) { ++count; });
  return count;
}

std::size_t max_bit(const SignalExpr& expr) {
  std::size_t bit = 0;
  visit_unique(expr, [&](const SignalExpr& e) {
    if (e.kind() == NodeKind::Rail) bit = std::max(bit, e.rail_id().bit);
  });
  return bit;
}

Integer magnitude_bound(const SignalExpr& expr) {
  std::unordered_map<const void*, Integer> memo;
  auto bound = [&](auto& self, const SignalExpr& e) -> Integer {
    if (auto it = memo.find(e.identity()); it != memo.end()) return it->second;
    Integer b;
    switch (e.kind()) {
      case NodeKind::Rail:
      case NodeKind::Unit: b = 1; break;
      case NodeKind::Product:
        b = 1;
        for (const auto& c : e.children()) b *= self(self, c);
        break;
      case NodeKind::Sum:
        b = 0;
        for (std::size_t k = 0; k < e.children().size(); ++k) b += abs(e.weights()[k]) * self(self, e.children()[k]);
        break;
    }
    memo.emplace(e.identity(), b);
    return b;
  };
  return bound(bound, expr);
}

// Evaluation keeps values in a machine word until they overflow. Products
// additionally batch small factors into a pending word so that a long product
// of small factors costs one big multiplication per word of growth rather
// than one per factor.
class Evaluator {
 public:
  explicit Evaluator(const SignSource& signs) : signs_(signs) {}

  struct Value {
    bool big = false;
    std::int64_t small = 0;
    Integer wide;

    Integer to_integer() const { return big ? wide : Integer(small); }
  };

  Value eval(const SignalExpr& e) const {
    const SignalExpr::Node& n = *e.node_;
    switch (n.kind) {
      case NodeKind::Unit: return Value{false, 1, {}};
      case NodeKind::Rail: return Value{false, signs_.sign(n.rail), {}};
      case NodeKind::Product: return eval_product(n);
      case NodeKind::Sum: return eval_sum(n);
    }
    return {};
  }

 private:
  Value eval_product(const SignalExpr::Node& n) const {
    std::int64_t pending = 1;
    bool have_wide = false;
    Integer wide;
    auto flush = [&] {
      if (!have_wide) {
        wide = pending;
        have_wide = true;
      } else {
        wide *= pending;
      }
      pending = 1;
    };
    for (const auto& c : n.children) {
      Value v = eval(c);
      if (!v.big) {
        std::int64_t next;
        if (!__builtin_mul_overflow(pending, v.small, &next)) {
          pending = next;
          continue;
        }
        flush();
        pending = v.small;
      } else {
        flush();
        wide *= v.wide;
      }
    }
    if (!have_wide) return Value{false, pending, {}};
    if (pending != 1) wide *= pending;
    return normalize(std::move(wide));
  }

  Value eval_sum(const SignalExpr::Node& n) const {
    std::int64_t acc = 0;
    bool have_wide = false;
    Integer wide;
    for (std::size_t k = 0; k < n.children.size(); ++k) {
      Value v = eval(n.children[k]);
      if (!v.big && n.small_weights_ok) {
        std::int64_t term, next;
        if (!__builtin_mul_overflow(n.small_weights[k], v.small, &term) &&
            !__builtin_add_overflow(acc, term, &next)) {
          acc = next;
          continue;
        }
      }
      if (!have_wide) {
        wide = acc;
        have_wide = true;
      } else {
        wide += acc;
      }
      acc = 0;
      wide += n.weights[k] * v.to_integer();
    }
    if (!have_wide) return Value{false, acc, {}};
    wide += acc;
    return normalize(std::move(wide));
  }

  static Value normalize(Integer v) {
    if (fits_int64(v)) return Value{false, static_cast<std::int64_t>(v), {}};
    return Value{true, 0, std::move(v)};
  }

  const SignSource& signs_;
};

Amplitude eval(const SignalExpr& expr, const SignSource& signs) { return Evaluator(signs).eval(expr).to_integer(); }

Amplitude eval(const SignalExpr& expr, ClockIndex t, const Rns& rns) { return eval(expr, RnsTick(rns, t)); }

Sign eval_string(const ProductString& w, const SignSource& signs) {
  Sign s = 1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const std::size_t bit = k + 1;
    switch (w.values()[k]) {
      case BitValue::V: break;
      case BitValue::L: s *= signs.sign({bit, 0}); break;
      case BitValue::H: s *= signs.sign({bit, 1}); break;
      case BitValue::X: s *= signs.sign({bit, 0}) * signs.sign({bit, 1}); break;
    }
  }
  return s;
}

Sign eval_string(const ProductString& w, ClockIndex t, const Rns& rns) {
  if (w.size() != rns.bits()) throw std::invalid_argument("product string length does not match noise system");
  return eval_string(w, RnsTick(rns, t));
}

Amplitude eval_superposition(const Superposition& y, const SignSource& signs) {
  Amplitude total = 0;
  for (const auto& [w, c] : y) total += eval_string(w, signs) > 0 ? c : Integer(-c);
  return total;
}

Amplitude eval_superposition(const Superposition& y, ClockIndex t, const Rns& rns) {
  if (y.bits() != rns.bits()) throw std::invalid_argument("superposition bit count does not match noise system");
  return eval_superposition(y, RnsTick(rns, t));
}

namespace {

class RailCache {
 public:
  const SignalExpr& get(std::size_t bit, unsigned rail) {
    auto [it, inserted] = cache_.try_emplace(Rns::rail_position({bit, rail}));
    if (inserted) it->second = SignalExpr::rail(bit, rail);
    return it->second;
  }

  SignalExpr compile(const ProductString& w) {
    std::vector<SignalExpr> factors;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::size_t bit = k + 1;
      const BitValue v = w.values()[k];
      if (v == BitValue::L || v == BitValue::X) factors.push_back(get(bit, 0));
      if (v == BitValue::H || v == BitValue::X) factors.push_back(get(bit, 1));
    }
    return SignalExpr::product(std::move(factors));
  }

 private:
  std::unordered_map<std::size_t, SignalExpr> cache_;
};

}  // namespace

SignalExpr compile_string(const ProductString& w) { return RailCache().compile(w); }

SignalExpr compile_superposition(const Superposition& y) {
  RailCache rails;
  std::vector<std::pair<Integer, SignalExpr>> terms;
  terms.reserve(y.size());
  for (const auto& [w, c] : y) terms.emplace_back(c, rails.compile(w));
  return SignalExpr::sum(std::move(terms));
}

std::vector<Amplitude> eval_window(const SignalExpr& expr, ClockIndex t0, std::size_t n, const Rns& rns,
                                   unsigned threads) {
  if (n == 0) throw std::invalid_argument("tick window must contain at least one tick");
  auto chunks = map_chunks<std::vector<Amplitude>>(n, threads, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Amplitude> out;
    out.reserve(end - begin);
    for (std::uint64_t k = begin; k < end; ++k) out.push_back(eval(expr, t0 + k, rns));
    return out;
  });
  std::vector<Amplitude> out;
  out.reserve(n);
  for (auto& c : chunks)
    for (auto& a : c) out.push_back(std::move(a));
  return out;
}

}  // namespace tinbl
