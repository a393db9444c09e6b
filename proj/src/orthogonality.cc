#include "ftskit/orthogonality.hh"

#include <algorithm>
#include <map>

#include "ftskit/suite.hh"

namespace ftskit {

namespace {

struct Candidate {
  Trace full;
  Trace sigma_prime;
  Action action;
  Trace sigma_double_prime;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.full.size() != b.full.size()) return a.full.size() < b.full.size();
  if (a.full != b.full) return a.full < b.full;
  return a.sigma_prime.size() < b.sigma_prime.size();
}

}  // namespace

OrthogonalityReport check_orthogonal(const FeatureSpec& impl, const FeatureSpec& spec,
                                     const ProductConfig& lambda, int depth) {
  if (!spec.phi().evaluate(lambda)) {
    throw Error("product '" + lambda.name + "' does not satisfy the specification formula");
  }
  const bool declared = std::any_of(
      spec.products().begin(), spec.products().end(),
      [&](const ProductConfig& p) { return p.same_assignment(lambda); });
  if (!declared) {
    throw Error("product '" + lambda.name + "' is not a product of the specification");
  }
  if (depth < 0) throw Error("depth must be non-negative");

  const TestSuite suite = build_suite(spec, depth);
  const FeatureSpec product = derive_product(spec.base(), lambda);
  const StepRelation& product_rel = product.step_relation();
  const StepRelation& impl_rel = impl.step_relation();
  const std::set<std::string> impl_init = impl.initial_closure();
  const std::set<std::string> product_init = product.initial_closure();

  // Inner suite states grouped for spine lookup: candidates for a spine of
  // sigma' are exactly the suite traces with the same X-component.
  std::map<std::vector<std::string>, std::vector<const Trace*>> by_component;
  for (const auto& [trace, node] : suite.nodes()) {
    by_component[node.x].push_back(&trace);
  }

  const std::set<Trace> impl_traces = straces_upto(impl, depth);

  std::vector<Candidate> failures;
  for (const Trace& rho : impl_traces) {
    if (rho.empty()) continue;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      const Trace sigma_prime = rho.prefix(i);
      const Action& a = rho[i];
      const Trace sigma_double_prime = rho.suffix(i + 1);

      // new(sigma', a): sigma' is a product trace and some a-transition of
      // the spec reachable after sigma' has a guard lambda does not satisfy.
      const std::set<std::string> after_product = steps(product_rel, product_init, sigma_prime);
      if (after_product.empty()) continue;
      const TestSuite::Node* anchor = suite.find(sigma_prime);
      if (anchor == nullptr) continue;
      if (!new_behavior_from(spec, lambda, anchor->x, a)) continue;

      // Obligation: some spine of sigma' lets the implementation run
      // sigma.a.sigma''.
      bool discharged = false;
      for (const Trace* sigma : by_component.at(anchor->x)) {
        if (!is_spine(suite, *sigma, sigma_prime)) continue;
        Trace replay = sigma->extended(a);
        for (const Action& b : sigma_double_prime) replay.append(b);
        if (!steps(impl_rel, impl_init, replay).empty()) {
          discharged = true;
          break;
        }
      }
      if (!discharged) {
        failures.push_back(Candidate{rho, sigma_prime, a, sigma_double_prime});
      }
    }
  }

  OrthogonalityReport report;
  report.searched_depth = depth;
  if (!failures.empty()) {
    const auto best = std::min_element(failures.begin(), failures.end(), candidate_less);
    report.verdict = OrthogonalityReport::Verdict::NotOrthogonal;
    report.witness = OrthogonalityReport::Witness{best->sigma_prime, best->action,
                                                  best->sigma_double_prime};
  }
  return report;
}

}  // namespace ftskit
