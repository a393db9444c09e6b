#pragma once

#include <cstdint>

#include "ftskit/orthogonality.hh"
#include "ftskit/spinal.hh"

namespace ftskit {

/// Inclusive integer range for generator parameters.
struct IntRange {
  int lo = 0;
  int hi = 0;
  bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Knobs of the random model generator. All randomness flows from `seed`
/// through one generator in a fixed draw order, so a (seed, params) pair
/// identifies a model exactly.
struct GenParams {
  std::uint64_t seed = 0;
  IntRange n_states{2, 6};
  IntRange n_features{2, 3};
  IntRange n_products{1, 3};
  IntRange n_inputs{1, 3};
  IntRange n_outputs{1, 3};
  /// Random transitions attempted beyond the reachability backbone.
  IntRange n_transitions{2, 8};
  double p_guard = 0.6;  // probability a transition carries a feature literal
  double p_tau = 0.1;    // probability a transition is internal
  int depth = 5;         // suite bound used by the verification driver
};

/// One refuted property instance, with everything needed to replay it.
struct Counterexample {
  std::size_t case_index = 0;
  std::string description;
  std::string spec_text;           // specification base model, serialized
  std::string impl_text;           // implementation base model, if any
  std::string formula;             // projection formula
  std::string product;             // product name and assignment
  std::vector<Trace> traces;       // violating trace material
};

/// Outcome of a property check. `cases_applicable` counts instances whose
/// premises held (so a pass with zero applicable cases is visibly vacuous);
/// `notes` carries per-case diagnostics for reporting.
struct PropertyReport {
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::size_t cases_applicable = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool ok() const { return counterexamples.empty(); }
};

/// Deterministic random model: states q0..qN with a reachability backbone
/// plus extra random transitions, feature-literal guards with probability
/// p_guard, and total random product configurations. Always validates.
Iofts random_iofts(const GenParams& params);

/// Derives a concrete implementation from `spec` and injects a fault chosen
/// by `seed % 4`: 0 keeps it conforming, 1 adds an output transition, 2
/// removes one (which can introduce unexpected quiescence), 3 redirects a
/// transition. The result is re-projected so its quiescence is recomputed.
FeatureSpec mutate_impl(const FeatureSpec& spec, std::uint64_t seed);

/// Checks the failure-transfer property behind spinal testing on the suite
/// itself: for every failing suite path sigma'.a.sigma'' with new(sigma', a)
/// and every spine sigma of sigma', the suite must also fail on
/// sigma.a.sigma''. Paths are bounded by min(k, suite depth). Applicable
/// cases are decompositions where the new-action premise holds and at least
/// one spine exists. Requires lambda (total over the features) |= spec.phi.
PropertyReport check_lemma_spine_fail(const TestSuite& suite, const ProductConfig& lambda,
                                      int k);

/// Checks the incremental-testing guarantee on one (spec, lambda, impl)
/// triple at depth k: when impl is orthogonal w.r.t. (spec, lambda), passes
/// the product suite of lambda, and passes the spinal suite, it must pass
/// the full suite of spec. Premise failures make the case non-applicable
/// (counted and noted, not asserted). Requires lambda to be a product of
/// spec satisfying its formula.
PropertyReport check_theorem_incremental(const FeatureSpec& spec, const ProductConfig& lambda,
                                         const FeatureSpec& impl, int k);

/// Checks that every product satisfying phi conforms to the projection:
/// derive_product(m, lambda) passes build_suite(project(m, phi), k) for each
/// lambda |= phi. One case per product of m.
PropertyReport check_product_conformance(const Iofts& m, const Formula& phi, int k);

}  // namespace ftskit
