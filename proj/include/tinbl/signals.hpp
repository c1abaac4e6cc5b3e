#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "tinbl/algebra.hpp"
#include "tinbl/rns.hpp"

namespace tinbl {

/// Instantaneous value of a signal at one clock tick.
using Amplitude = Integer;

/// Supplies rail signs for a single evaluation. Lets the evaluator run on a
/// live reference noise system or on an explicit sign assignment.
class SignSource {
 public:
  virtual ~SignSource() = default;
  virtual Sign sign(RtwId id) const = 0;
};

/// Signs of `rns` frozen at tick t.
class RnsTick final : public SignSource {
 public:
  RnsTick(const Rns& rns, ClockIndex t) : rns_(rns), t_(t) {}
  Sign sign(RtwId id) const override { return rns_.sign(id, t_); }

 private:
  const Rns& rns_;
  ClockIndex t_;
};

enum class NodeKind { Rail, Unit, Product, Sum };

/// Factored signal expression: an immutable DAG of rail references, the unit
/// constant, products and integer-weighted sums. Copies share structure, so a
/// subexpression can appear under many parents at no cost.
class SignalExpr {
 public:
  /// The unit constant.
  SignalExpr();

  static SignalExpr rail(RtwId id);
  static SignalExpr rail(std::size_t bit, unsigned rail);
  static SignalExpr unit() { return SignalExpr(); }
  /// An empty product evaluates to 1.
  static SignalExpr product(std::vector<SignalExpr> factors);
  /// An empty sum evaluates to 0.
  static SignalExpr sum(std::vector<std::pair<Integer, SignalExpr>> terms);

  NodeKind kind() const noexcept;
  /// Only meaningful for NodeKind::Rail.
  RtwId rail_id() const noexcept;
  /// Factors of a Product or addends of a Sum.
  const std::vector<SignalExpr>& children() const noexcept;
  /// Sum weights, parallel to children(). Empty for other kinds.
  const std::vector<Integer>& weights() const noexcept;

  /// Stable identity of the shared node, used to detect DAG sharing.
  const void* identity() const noexcept { return node_.get(); }

  struct Node;

 private:
  explicit SignalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend class Evaluator;
};

/// Number of distinct nodes in the DAG.
std::size_t node_count(const SignalExpr& expr);

/// Largest bit index referenced, 0 if none.
std::size_t max_bit(const SignalExpr& expr);

/// Upper bound on |eval(expr)| over all sign assignments.
Integer magnitude_bound(const SignalExpr& expr);

/// Value of expr under the given signs. Cost is linear in the tree size.
Amplitude eval(const SignalExpr& expr, const SignSource& signs);

/// Value of expr at tick t. Throws std::out_of_range when a rail is outside
/// the noise system.
Amplitude eval(const SignalExpr& expr, ClockIndex t, const Rns& rns);

/// Signal of one product string at tick t: L -> R_i0, H -> R_i1, X -> R_i0 R_i1, V -> 1.
Sign eval_string(const ProductString& w, ClockIndex t, const Rns& rns);
Sign eval_string(const ProductString& w, const SignSource& signs);

/// Sum of coeff * eval_string over the terms of y.
Amplitude eval_superposition(const Superposition& y, ClockIndex t, const Rns& rns);
Amplitude eval_superposition(const Superposition& y, const SignSource& signs);

/// Product of rails carrying one product string.
SignalExpr compile_string(const ProductString& w);

/// Sum of products equivalent to y. Rail leaves are shared across terms.
SignalExpr compile_superposition(const Superposition& y);

/// Amplitudes at t0, ..., t0 + n - 1. `threads` == 0 picks the hardware
/// concurrency; the result does not depend on it.
std::vector<Amplitude> eval_window(const SignalExpr& expr, ClockIndex t0, std::size_t n, const Rns& rns,
                                   unsigned threads = 0);

}  // namespace tinbl
