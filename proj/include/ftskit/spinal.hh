#pragma once

#include "ftskit/suite.hh"

namespace ftskit {

/// Backbone-distinctness: every prefix of sigma (including the empty trace
/// and sigma itself) reaches a different X-component in the suite. Spines
/// must satisfy it so that they never revisit tested territory.
/// sigma must index an Inner state of the suite.
bool bt_holds(const TestSuite& suite, const Trace& sigma);

/// sigma is a spine of sigma_prime: a subsequence reaching the same
/// X-component, with backbone-distinctness. Both traces must index Inner
/// states of the suite.
bool is_spine(const TestSuite& suite, const Trace& sigma, const Trace& sigma_prime);

/// Some a-transition out of the states `x` in `spec` carries a guard lambda
/// does not satisfy: taking a there can exercise behavior lambda never has.
bool new_behavior_from(const FeatureSpec& spec, const ProductConfig& lambda,
                       const std::vector<std::string>& x, const Action& a);

/// new(sigma, a): sigma is a suspension trace of the product lambda and some
/// a-transition after sigma (in the projected spec, delta edges included)
/// has a guard lambda does not satisfy. Requires lambda |= spec.phi.
bool is_new(const FeatureSpec& spec, const ProductConfig& lambda,
            const Trace& sigma, const Action& a);

/// A spinal test suite: the suite of Δφ with the behavior already covered by
/// testing the product lambda pruned away. Λ∖{lambda} is carried as metadata
/// for bookkeeping across an incremental testing campaign; execution reads
/// only the restricted suite.
struct SpinalSuite {
  TestSuite suite;
  ProductConfig base_product;                    // the lambda pruned against
  std::vector<ProductConfig> remaining_products; // Λ \ {lambda}
};

/// Restriction of `suite` to
///  - X': Inner states whose trace is a suspension trace of the product
///    lambda and satisfies backbone-distinctness, and
///  - X'': states hanging off X' through steps that are new w.r.t. lambda —
///    the first action must satisfy is_new at its X' anchor and every
///    further action must again offer lambda-free behavior. (Continuations
///    through behavior lambda already covers would re-test the spine's
///    territory; see the off-free cruise example.)
/// Verdict states and every base edge between retained states survive, so
/// each retained Inner state keeps its full observation classification.
/// Requires lambda |= suite.spec().phi() and lambda ∈ suite.spec().products().
SpinalSuite build_spinal(const TestSuite& suite, const ProductConfig& lambda);

}  // namespace ftskit
