#include "ftskit/projection.hh"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ftskit {

FeatureSpec::FeatureSpec(std::shared_ptr<const Iofts> base, Formula phi,
                         std::vector<std::string> states,
                         std::vector<Transition> transitions,
                         std::vector<ProductConfig> products)
    : base_(std::move(base)),
      phi_(std::move(phi)),
      states_(std::move(states)),
      transitions_(std::move(transitions)),
      products_(std::move(products)),
      rel_(std::make_shared<StepRelation>(transitions_)) {}

std::set<std::string> FeatureSpec::initial_closure() const {
  return rel_->tau_closure({initial()});
}

bool FeatureSpec::has_delta_at(const std::string& state) const {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [&](const Transition& t) {
                       return t.src == state && t.action.is_delta();
                     });
}

bool quiescent(const Iofts& m, const std::string& state, const ProductConfig& lambda) {
  for (const Transition& t : m.transitions) {
    if (t.src != state) continue;
    if (t.action.kind != ActionKind::Output && !t.action.is_tau()) continue;
    if (t.guard.evaluate(lambda)) return false;
  }
  return true;
}

FeatureSpec project(const Iofts& m, const Formula& phi) {
  return project(std::make_shared<const Iofts>(m), phi);
}

FeatureSpec project(std::shared_ptr<const Iofts> m, const Formula& phi) {
  {
    std::vector<Diagnostic> diags = validate(*m);
    if (!diags.empty()) {
      std::ostringstream os;
      os << "cannot project an ill-formed model:";
      for (const Diagnostic& d : diags) os << "\n  " << d.to_string();
      throw Error(os.str());
    }
  }
  std::set<FeatureId> declared(m->features.begin(), m->features.end());
  for (const FeatureId& v : phi.variables())
    if (!declared.count(v))
      throw Error("projection formula references undeclared feature '" + v + "'");

  std::vector<ProductConfig> selected = sat_in(phi, m->products);

  // Rule (act): keep s --a,g--> s' as s --a,phi&g--> s' when some product
  // satisfies phi & g.
  std::vector<Transition> kept;
  for (const Transition& t : m->transitions) {
    Formula conjoined = Formula::conjunction(phi, t.guard);
    if (!sat_in(conjoined, m->products).empty())
      kept.push_back({t.src, t.action, std::move(conjoined), t.dst});
  }

  // Rule (quiet): a delta self-loop wherever some selected product is
  // quiescent, guarded by phi & (disjunction of their characteristic
  // formulas), deliberately left unsimplified.
  for (const std::string& s : m->states) {
    Formula quiet_products;
    bool any = false;
    for (const ProductConfig& lambda : selected) {
      if (!quiescent(*m, s, lambda)) continue;
      Formula chi = config_formula(lambda, m->features);
      quiet_products = any ? Formula::disjunction(std::move(quiet_products), std::move(chi))
                           : std::move(chi);
      any = true;
    }
    if (any)
      kept.push_back({s, Action::delta(),
                      Formula::conjunction(phi, std::move(quiet_products)), s});
  }

  // Restrict to states reachable from the initial state over kept edges.
  std::set<std::string> reachable{m->initial};
  std::deque<std::string> work{m->initial};
  while (!work.empty()) {
    std::string s = work.front();
    work.pop_front();
    for (const Transition& t : kept)
      if (t.src == s && reachable.insert(t.dst).second) work.push_back(t.dst);
  }

  std::vector<std::string> states;
  for (const std::string& s : m->states)
    if (reachable.count(s)) states.push_back(s);

  std::vector<Transition> transitions;
  for (Transition& t : kept)
    if (reachable.count(t.src)) transitions.push_back(std::move(t));

  return FeatureSpec(std::move(m), phi, std::move(states), std::move(transitions),
                     std::move(selected));
}

FeatureSpec derive_product(const Iofts& m, const ProductConfig& lambda) {
  return project(m, config_formula(lambda, m.features));
}

std::set<Trace> straces_upto(const FeatureSpec& spec, int depth) {
  return straces_upto(spec.step_relation(), {spec.initial()}, depth);
}

}  // namespace ftskit
