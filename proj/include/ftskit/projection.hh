#pragma once

#include <memory>

#include "ftskit/model.hh"

namespace ftskit {

/// The projection of a model onto a feature formula: the behavior available
/// to the products satisfying phi, restricted to reachable states, with
/// quiescence made observable as guarded delta self-loops.
///
/// States carry their underlying names; their identity as *projected* states
/// is the (state, phi) pair embodied by the owning FeatureSpec, so the same
/// base state projected under two formulas yields distinct values.
class FeatureSpec {
 public:
  FeatureSpec(std::shared_ptr<const Iofts> base, Formula phi,
              std::vector<std::string> states, std::vector<Transition> transitions,
              std::vector<ProductConfig> products);

  const Iofts& base() const { return *base_; }
  std::shared_ptr<const Iofts> base_ptr() const { return base_; }
  const Formula& phi() const { return phi_; }
  /// Reachable states, in the base model's declaration order.
  const std::vector<std::string>& states() const { return states_; }
  const std::string& initial() const { return base_->initial; }
  /// Projected transitions (guards conjoined with phi) plus delta self-loops.
  const std::vector<Transition>& transitions() const { return transitions_; }
  /// The products of the base satisfying phi, in declaration order.
  const std::vector<ProductConfig>& products() const { return products_; }
  bool has_empty_products() const { return products_.empty(); }

  const StepRelation& step_relation() const { return *rel_; }
  /// tau-closure of the initial state.
  std::set<std::string> initial_closure() const;

  /// Whether the projection carries a delta self-loop at `state`.
  bool has_delta_at(const std::string& state) const;

 private:
  std::shared_ptr<const Iofts> base_;
  Formula phi_;
  std::vector<std::string> states_;
  std::vector<Transition> transitions_;
  std::vector<ProductConfig> products_;
  std::shared_ptr<const StepRelation> rel_;
};

/// Q(state, lambda): no output or tau transition out of `state` has a guard
/// lambda satisfies — the product sits silent there until an input arrives.
bool quiescent(const Iofts& m, const std::string& state, const ProductConfig& lambda);

/// Projection of `m` onto `phi`:
///  - a base transition s --a,g--> s' survives (with guard phi & g) when some
///    product satisfies phi & g;
///  - a state quiescent for at least one product satisfying phi gains a delta
///    self-loop guarded phi & (disjunction of those products' characteristic
///    formulas), kept unsimplified;
///  - the result is restricted to states reachable from the initial state.
/// The model must validate cleanly; phi may only use declared features.
FeatureSpec project(const Iofts& m, const Formula& phi);
FeatureSpec project(std::shared_ptr<const Iofts> m, const Formula& phi);

/// The concrete product lambda: projection onto its characteristic formula.
FeatureSpec derive_product(const Iofts& m, const ProductConfig& lambda);

/// Suspension traces of the projection up to `depth` (prefix-closed).
std::set<Trace> straces_upto(const FeatureSpec& spec, int depth);

}  // namespace ftskit
