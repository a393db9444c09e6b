#include "ftskit/exec.hh"

#include <algorithm>

namespace ftskit {

bool ImplementationPort::replay(const Trace& t, bool angelic_inputs) {
  reset();
  for (const Action& a : t) {
    if (apply(a)) continue;
    if (angelic_inputs && a.is_input()) continue;  // absorbed self-loop
    return false;
  }
  return true;
}

ModelPort::ModelPort(FeatureSpec impl) : impl_(std::move(impl)) { reset(); }

void ModelPort::reset() { config_ = impl_.initial_closure(); }

bool ModelPort::apply(const Action& a) {
  std::set<std::string> next = impl_.step_relation().successors(config_, a);
  if (next.empty()) return false;
  config_ = std::move(next);
  return true;
}

namespace {

void sort_traces(std::vector<Trace>& traces) {
  std::sort(traces.begin(), traces.end(), [](const Trace& a, const Trace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
}

// Depth-first walk of the synchronized product. The implementation
// configuration evolves deterministically with the trace, so the recursion
// carries it by value and never needs to undo anything.
struct ModelRunner {
  const TestSuite& suite;
  const FeatureSpec& impl;
  RunOptions opts;
  std::vector<Trace> failures;
  std::size_t explored = 0;

  void visit(const Trace& sigma, const std::set<std::string>& config) {
    const TestSuite::Node* node = suite.find(sigma);
    ++explored;
    for (const auto& [a, targets] : node->edges) {
      if (a.is_input()) {
        std::set<std::string> next = impl.step_relation().successors(config, a);
        if (next.empty()) {
          if (!opts.assume_input_enabled) continue;
          next = config;  // angelic self-loop: the suite advances alone
        }
        if (targets.inner) visit(sigma.extended(a), next);
        continue;
      }
      // Observation: the implementation takes part iff it can produce it.
      std::set<std::string> next = impl.step_relation().successors(config, a);
      if (next.empty()) continue;
      if (targets.fail) failures.push_back(sigma.extended(a));
      if (targets.inner) visit(sigma.extended(a), next);
    }
  }
};

struct PortRunner {
  const TestSuite& suite;
  ImplementationPort& port;
  RunOptions opts;
  std::vector<Trace> failures;
  std::size_t explored = 0;

  void visit(const Trace& sigma) {
    const TestSuite::Node* node = suite.find(sigma);
    ++explored;
    for (const auto& [a, targets] : node->edges) {
      if (!port.replay(sigma, opts.assume_input_enabled)) continue;
      bool synced = port.apply(a);
      if (!synced && a.is_input() && opts.assume_input_enabled) synced = true;
      if (!synced) continue;
      if (a.is_input()) {
        if (targets.inner) visit(sigma.extended(a));
        continue;
      }
      if (targets.fail) failures.push_back(sigma.extended(a));
      if (targets.inner) visit(sigma.extended(a));
    }
  }
};

}  // namespace

std::vector<std::pair<SuiteState, std::set<std::string>>> sync_step(
    const TestSuite& suite, const SuiteState& st,
    const std::set<std::string>& impl_states, const Action& a,
    const FeatureSpec& impl, const RunOptions& opts) {
  if (!st.is_inner()) throw Error("sync_step from a verdict state");
  const TestSuite::Node* node = suite.find(st.sigma);
  if (!node) throw Error("sync_step from a state not in the suite");

  std::vector<std::pair<SuiteState, std::set<std::string>>> out;
  auto edge = node->edges.find(a);
  if (edge == node->edges.end()) return out;
  const TestSuite::EdgeTargets& targets = edge->second;

  std::set<std::string> next = impl.step_relation().successors(impl_states, a);
  if (next.empty()) {
    if (a.is_input() && opts.assume_input_enabled) next = impl_states;
    else return out;  // no synchronization possible
  }

  if (targets.inner) {
    Trace ext = st.sigma.extended(a);
    const TestSuite::Node* child = suite.find(ext);
    out.emplace_back(SuiteState::inner(child->x, std::move(ext)), next);
  }
  if (targets.pass) out.emplace_back(SuiteState::pass(), next);
  if (targets.fail) out.emplace_back(SuiteState::fail(), next);
  return out;
}

RunResult run_suite(const TestSuite& suite, const FeatureSpec& impl,
                    const RunOptions& opts) {
  ModelRunner runner{suite, impl, opts, {}, 0};
  runner.visit(Trace{}, impl.initial_closure());
  RunResult result;
  result.failing_traces = std::move(runner.failures);
  sort_traces(result.failing_traces);
  result.verdict = result.failing_traces.empty() ? RunResult::Verdict::Pass
                                                 : RunResult::Verdict::Fail;
  result.explored = runner.explored;
  return result;
}

RunResult run_suite(const TestSuite& suite, ImplementationPort& port,
                    const RunOptions& opts) {
  PortRunner runner{suite, port, opts, {}, 0};
  runner.visit(Trace{});
  RunResult result;
  result.failing_traces = std::move(runner.failures);
  sort_traces(result.failing_traces);
  result.verdict = result.failing_traces.empty() ? RunResult::Verdict::Pass
                                                 : RunResult::Verdict::Fail;
  result.explored = runner.explored;
  return result;
}

bool passes(const FeatureSpec& impl, const TestSuite& suite, const RunOptions& opts) {
  return run_suite(suite, impl, opts).passed();
}

bool passes(ImplementationPort& port, const TestSuite& suite, const RunOptions& opts) {
  return run_suite(suite, port, opts).passed();
}

bool conforms(const FeatureSpec& impl, const FeatureSpec& spec, int depth,
              const RunOptions& opts) {
  return passes(impl, build_suite(spec, depth), opts);
}

std::vector<std::pair<std::string, Action>> check_input_enabled(const FeatureSpec& spec) {
  std::vector<std::pair<std::string, Action>> missing;
  for (const std::string& s : spec.states()) {
    for (const std::string& name : spec.base().inputs) {
      Action a = Action::input(name);
      bool enabled = std::any_of(spec.transitions().begin(), spec.transitions().end(),
                                 [&](const Transition& t) {
                                   return t.src == s && t.action == a;
                                 });
      if (!enabled) missing.emplace_back(s, std::move(a));
    }
  }
  std::sort(missing.begin(), missing.end());
  return missing;
}

}  // namespace ftskit
