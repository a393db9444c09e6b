#include "ftskit/harness.hh"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "ftskit/exec.hh"
#include "ftskit/text.hh"

namespace ftskit {

namespace {

// Local draw primitives instead of <random> distributions: distribution
// output differs between standard libraries, and generated models must be a
// function of the seed alone.
int pick_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

void require_range(const IntRange& r, int minimum, const std::string& what) {
  if (r.lo > r.hi || r.lo < minimum) {
    throw Error("invalid generator range for " + what + ": " + std::to_string(r.lo) + ".." +
                std::to_string(r.hi));
  }
}

void require_probability(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error("invalid generator probability for " + what + ": " + std::to_string(p));
  }
}

std::string render_product(const ProductConfig& p) {
  std::string out = p.name;
  for (const auto& [feature, value] : p.assignment) {
    out += " " + feature + "=" + (value ? "1" : "0");
  }
  return out;
}

/// Whether following rho from the suite root reaches Fail. Verdicts absorb,
/// so hitting a fail edge anywhere along the path counts.
bool suite_path_fails(const TestSuite& suite, const Trace& rho) {
  Trace cursor;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const TestSuite::Node* node = suite.find(cursor);
    if (node == nullptr) return false;
    const auto it = node->edges.find(rho[i]);
    if (it == node->edges.end()) return false;
    if (it->second.fail) return true;
    if (!it->second.inner) return false;
    cursor.append(rho[i]);
  }
  return false;
}

}  // namespace

Iofts random_iofts(const GenParams& params) {
  require_range(params.n_states, 1, "states");
  require_range(params.n_features, 0, "features");
  require_range(params.n_products, 1, "products");
  require_range(params.n_inputs, 0, "inputs");
  require_range(params.n_outputs, 0, "outputs");
  require_range(params.n_transitions, 0, "transitions");
  require_probability(params.p_guard, "p_guard");
  require_probability(params.p_tau, "p_tau");
  if (params.depth < 0) throw Error("generator depth must be non-negative");

  std::mt19937_64 rng(params.seed);
  const int n_states = pick_int(rng, params.n_states.lo, params.n_states.hi);
  const int n_features = pick_int(rng, params.n_features.lo, params.n_features.hi);
  const int n_inputs = pick_int(rng, params.n_inputs.lo, params.n_inputs.hi);
  const int n_outputs = pick_int(rng, params.n_outputs.lo, params.n_outputs.hi);
  const int n_products = pick_int(rng, params.n_products.lo, params.n_products.hi);
  const int n_extra = pick_int(rng, params.n_transitions.lo, params.n_transitions.hi);

  Iofts m;
  m.name = "rand" + std::to_string(params.seed);
  for (int i = 0; i < n_states; ++i) m.states.push_back("q" + std::to_string(i));
  m.initial = m.states.front();
  for (int i = 0; i < n_inputs; ++i) m.inputs.push_back("i" + std::to_string(i));
  for (int i = 0; i < n_outputs; ++i) m.outputs.push_back("o" + std::to_string(i));
  for (int i = 0; i < n_features; ++i) m.features.push_back("f" + std::to_string(i));

  for (int i = 0; i < n_products; ++i) {
    ProductConfig p;
    p.name = "p" + std::to_string(i);
    for (const FeatureId& f : m.features) p.assignment[f] = chance(rng, 0.5);
    m.products.push_back(std::move(p));
  }

  const auto random_action = [&]() -> Action {
    const int total = n_inputs + n_outputs;
    if (total == 0 || chance(rng, params.p_tau)) return Action::tau();
    const int idx = pick_int(rng, 0, total - 1);
    if (idx < n_inputs) return Action::input(m.inputs[idx]);
    return Action::output(m.outputs[idx - n_inputs]);
  };
  const auto random_guard = [&]() -> Formula {
    if (n_features == 0 || !chance(rng, params.p_guard)) return Formula::constant(true);
    const Formula var = Formula::var(m.features[pick_int(rng, 0, n_features - 1)]);
    return chance(rng, 0.5) ? Formula::negation(var) : var;
  };

  std::set<std::tuple<std::string, Action, std::string>> seen;
  const auto add_edge = [&](std::string src, Action a, std::string dst) {
    if (!seen.insert({src, a, dst}).second) return;
    m.transitions.push_back({std::move(src), std::move(a), random_guard(), std::move(dst)});
  };

  // Backbone: every state is reachable from q0 in the raw graph (products
  // may still cut states off, which is exactly the interesting case).
  for (int i = 1; i < n_states; ++i) {
    add_edge(m.states[pick_int(rng, 0, i - 1)], random_action(), m.states[i]);
  }
  for (int i = 0; i < n_extra; ++i) {
    add_edge(m.states[pick_int(rng, 0, n_states - 1)], random_action(),
             m.states[pick_int(rng, 0, n_states - 1)]);
  }

  const std::vector<Diagnostic> problems = validate(m);
  if (!problems.empty()) {
    throw Error("random model generator produced an ill-formed model: " +
                problems.front().to_string());
  }
  return m;
}

FeatureSpec mutate_impl(const FeatureSpec& spec, std::uint64_t seed) {
  if (spec.products().empty()) {
    throw Error("cannot derive an implementation: the specification has no products");
  }
  std::mt19937_64 rng(seed);
  const ProductConfig& base =
      spec.products()[static_cast<std::size_t>(pick_int(rng, 0, static_cast<int>(spec.products().size()) - 1))];

  Iofts c;
  c.name = "impl" + std::to_string(seed);
  c.states = spec.states();
  c.initial = spec.initial();
  c.inputs = spec.base().inputs;
  c.outputs = spec.base().outputs;
  c.products = {ProductConfig{"impl", {}}};

  std::set<std::tuple<std::string, Action, std::string>> seen;
  for (const Transition& t : spec.transitions()) {
    if (t.action.is_delta()) continue;
    if (!t.guard.evaluate(base)) continue;
    if (seen.insert({t.src, t.action, t.dst}).second) {
      c.transitions.push_back({t.src, t.action, Formula::constant(true), t.dst});
    }
  }

  const int n_states = static_cast<int>(c.states.size());
  const auto pick_state = [&]() { return c.states[pick_int(rng, 0, n_states - 1)]; };
  switch (seed % 4) {
    case 0:  // identity: a conforming product implementation
      break;
    case 1: {  // add an output transition
      if (!c.outputs.empty()) {
        for (int attempt = 0; attempt < 8; ++attempt) {
          std::string src = pick_state();
          Action a = Action::output(
              c.outputs[static_cast<std::size_t>(pick_int(rng, 0, static_cast<int>(c.outputs.size()) - 1))]);
          std::string dst = pick_state();
          if (seen.insert({src, a, dst}).second) {
            c.transitions.push_back({std::move(src), std::move(a), Formula::constant(true),
                                     std::move(dst)});
            break;
          }
        }
      }
      break;
    }
    case 2: {  // remove an output transition (can make a state quiescent)
      std::vector<std::size_t> outputs_at;
      for (std::size_t i = 0; i < c.transitions.size(); ++i) {
        if (c.transitions[i].action.kind == ActionKind::Output) outputs_at.push_back(i);
      }
      if (!outputs_at.empty()) {
        const std::size_t victim = outputs_at[static_cast<std::size_t>(
            pick_int(rng, 0, static_cast<int>(outputs_at.size()) - 1))];
        c.transitions.erase(c.transitions.begin() + static_cast<std::ptrdiff_t>(victim));
      }
      break;
    }
    default: {  // redirect a transition
      if (!c.transitions.empty() && n_states > 1) {
        for (int attempt = 0; attempt < 8; ++attempt) {
          Transition& t = c.transitions[static_cast<std::size_t>(
              pick_int(rng, 0, static_cast<int>(c.transitions.size()) - 1))];
          const std::string dst = pick_state();
          if (dst != t.dst && !seen.contains({t.src, t.action, dst})) {
            seen.erase({t.src, t.action, t.dst});
            seen.insert({t.src, t.action, dst});
            t.dst = dst;
            break;
          }
        }
      }
      break;
    }
  }

  return project(std::make_shared<const Iofts>(std::move(c)), Formula::constant(true));
}

PropertyReport check_lemma_spine_fail(const TestSuite& suite, const ProductConfig& lambda,
                                      int k) {
  const FeatureSpec& spec = suite.spec();
  if (!spec.phi().evaluate(lambda)) {
    throw Error("product '" + lambda.name + "' does not satisfy the specification formula");
  }
  if (k < 0) throw Error("depth must be non-negative");

  PropertyReport report;
  const FeatureSpec product = derive_product(spec.base(), lambda);
  const StepRelation& product_rel = product.step_relation();
  const std::set<std::string> product_init = product.initial_closure();

  // Spine candidates for sigma' share its X-component, so group once up front.
  std::map<std::vector<std::string>, std::vector<const Trace*>> by_component;
  for (const auto& [trace, node] : suite.nodes()) {
    by_component[node.x].push_back(&trace);
  }

  for (const auto& [sigma_node, node] : suite.nodes()) {
    for (const auto& [last, targets] : node.edges) {
      if (!targets.fail) continue;
      const Trace rho = sigma_node.extended(last);
      if (static_cast<int>(rho.size()) > k) continue;

      for (std::size_t i = 0; i < rho.size(); ++i) {
        const Trace sigma_prime = rho.prefix(i);
        const Action& a = rho[i];
        const Trace sigma_double_prime = rho.suffix(i + 1);
        ++report.cases_run;

        if (steps(product_rel, product_init, sigma_prime).empty()) continue;
        const TestSuite::Node* anchor = suite.find(sigma_prime);
        if (anchor == nullptr || !new_behavior_from(spec, lambda, anchor->x, a)) continue;

        bool any_spine = false;
        for (const Trace* sigma : by_component.at(anchor->x)) {
          if (!is_spine(suite, *sigma, sigma_prime)) continue;
          any_spine = true;
          Trace transformed = sigma->extended(a);
          for (const Action& b : sigma_double_prime) transformed.append(b);
          if (!suite_path_fails(suite, transformed)) {
            Counterexample ce;
            ce.description = "failing path " + trace_to_string(rho) + " with spine " +
                             trace_to_string(*sigma) + " does not transfer: the suite does not fail on " +
                             trace_to_string(transformed);
            ce.spec_text = print_model(spec.base());
            ce.formula = spec.phi().to_string();
            ce.product = render_product(lambda);
            ce.traces = {rho, *sigma, transformed};
            report.counterexamples.push_back(std::move(ce));
          }
        }
        if (any_spine) ++report.cases_applicable;
      }
    }
  }
  return report;
}

PropertyReport check_theorem_incremental(const FeatureSpec& spec, const ProductConfig& lambda,
                                         const FeatureSpec& impl, int k) {
  if (!spec.phi().evaluate(lambda)) {
    throw Error("product '" + lambda.name + "' does not satisfy the specification formula");
  }
  const bool declared = std::any_of(
      spec.products().begin(), spec.products().end(),
      [&](const ProductConfig& p) { return p.same_assignment(lambda); });
  if (!declared) {
    throw Error("product '" + lambda.name + "' is not a product of the specification");
  }
  if (k < 0) throw Error("depth must be non-negative");

  PropertyReport report;
  report.cases_run = 1;

  const TestSuite full = build_suite(spec, k);
  const TestSuite product_suite = build_suite(derive_product(spec.base(), lambda), k);
  const SpinalSuite spinal = build_spinal(full, lambda);
  const OrthogonalityReport orth = check_orthogonal(impl, spec, lambda, k);

  const RunOptions opts;  // drive inputs only where the implementation offers them
  const RunResult product_run = run_suite(product_suite, impl, opts);
  const RunResult spinal_run = run_suite(spinal.suite, impl, opts);

  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  report.notes.push_back(std::string("orthogonal=") + yn(orth.orthogonal()) +
                         " passes-product-suite=" + yn(product_run.passed()) +
                         " passes-spinal-suite=" + yn(spinal_run.passed()));

  if (orth.orthogonal() && product_run.passed() && spinal_run.passed()) {
    report.cases_applicable = 1;
    const RunResult full_run = run_suite(full, impl, opts);
    if (!full_run.passed()) {
      Counterexample ce;
      ce.description =
          "implementation satisfies the incremental premises but fails the full suite";
      ce.spec_text = print_model(spec.base());
      ce.impl_text = print_model(impl.base());
      ce.formula = spec.phi().to_string();
      ce.product = render_product(lambda);
      ce.traces = full_run.failing_traces;
      report.counterexamples.push_back(std::move(ce));
    }
  }
  return report;
}

PropertyReport check_product_conformance(const Iofts& m, const Formula& phi, int k) {
  if (k < 0) throw Error("depth must be non-negative");
  PropertyReport report;
  const FeatureSpec spec = project(m, phi);
  const TestSuite suite = build_suite(spec, k);
  for (const ProductConfig& lambda : m.products) {
    ++report.cases_run;
    if (!phi.evaluate(lambda)) {
      report.notes.push_back("product " + lambda.name + " does not satisfy " + phi.to_string() +
                             "; skipped");
      continue;
    }
    ++report.cases_applicable;
    const FeatureSpec impl = derive_product(m, lambda);
    const RunResult run = run_suite(suite, impl, RunOptions{});
    if (!run.passed()) {
      Counterexample ce;
      ce.description = "derived product " + lambda.name + " fails the projected suite";
      ce.spec_text = print_model(m);
      ce.formula = phi.to_string();
      ce.product = render_product(lambda);
      ce.traces = run.failing_traces;
      report.counterexamples.push_back(std::move(ce));
    }
  }
  return report;
}

}  // namespace ftskit
