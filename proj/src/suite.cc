#include "ftskit/suite.hh"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ftskit/text.hh"

namespace ftskit {

SuiteState SuiteState::inner(std::vector<std::string> x, Trace sigma) {
  std::sort(x.begin(), x.end());
  return {Kind::Inner, std::move(x), std::move(sigma)};
}

std::string SuiteState::to_string() const {
  switch (kind) {
    case Kind::Pass: return "pass";
    case Kind::Fail: return "fail";
    case Kind::Inner: break;
  }
  std::ostringstream os;
  os << "({";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << "}, \"" << trace_to_string(sigma) << "\")";
  return os.str();
}

TestSuite::TestSuite(FeatureSpec spec, int depth, std::map<Trace, Node> nodes)
    : spec_(std::move(spec)), depth_(depth), nodes_(std::move(nodes)) {
  for (const std::string& n : spec_.base().inputs) inputs_.push_back(Action::input(n));
  for (const std::string& n : spec_.base().outputs)
    observations_.push_back(Action::output(n));
  observations_.push_back(Action::delta());
  std::sort(inputs_.begin(), inputs_.end());
  std::sort(observations_.begin(), observations_.end());
}

SuiteState TestSuite::root() const {
  auto it = nodes_.find(Trace{});
  if (it == nodes_.end()) throw Error("suite has no root node");
  return SuiteState::inner(it->second.x, Trace{});
}

const TestSuite::Node* TestSuite::find(const Trace& sigma) const {
  auto it = nodes_.find(sigma);
  return it == nodes_.end() ? nullptr : &it->second;
}

SuiteState suite_root(const FeatureSpec& spec) {
  std::set<std::string> x0 = spec.initial_closure();
  return SuiteState::inner({x0.begin(), x0.end()}, Trace{});
}

TestSuite build_suite(const FeatureSpec& spec, int depth) {
  if (depth < 0) throw Error("suite depth must be nonnegative");

  std::vector<Action> inputs, observations;
  for (const std::string& n : spec.base().inputs) inputs.push_back(Action::input(n));
  for (const std::string& n : spec.base().outputs)
    observations.push_back(Action::output(n));
  observations.push_back(Action::delta());
  std::sort(inputs.begin(), inputs.end());
  std::sort(observations.begin(), observations.end());

  const StepRelation& rel = spec.step_relation();

  std::map<Trace, TestSuite::Node> nodes;
  std::deque<std::pair<Trace, std::set<std::string>>> work;
  work.emplace_back(Trace{}, spec.initial_closure());
  nodes[Trace{}] = {};

  while (!work.empty()) {
    auto [sigma, x] = std::move(work.front());
    work.pop_front();
    TestSuite::Node& node = nodes[sigma];
    node.x.assign(x.begin(), x.end());
    bool frontier = static_cast<int>(sigma.size()) >= depth;

    // Inputs extend the experiment but never carry a verdict.
    if (!frontier) {
      for (const Action& a : inputs) {
        std::set<std::string> y = rel.successors(x, a);
        if (y.empty()) continue;
        node.edges[a].inner = true;
        Trace ext = sigma.extended(a);
        if (!nodes.count(ext)) {
          nodes[ext] = {};
          work.emplace_back(std::move(ext), std::move(y));
        }
      }
    }

    // Every observation is classified at every node: allowed observations
    // pass (and continue below the depth bound), anything else fails.
    for (const Action& a : observations) {
      std::set<std::string> y = rel.successors(x, a);
      TestSuite::EdgeTargets& e = node.edges[a];
      if (y.empty()) {
        e.fail = true;
        continue;
      }
      e.pass = true;
      if (!frontier) {
        e.inner = true;
        Trace ext = sigma.extended(a);
        if (!nodes.count(ext)) {
          nodes[ext] = {};
          work.emplace_back(std::move(ext), std::move(y));
        }
      }
    }
  }

  return TestSuite(spec, depth, std::move(nodes));
}

std::vector<std::pair<Action, SuiteState>> expand(const TestSuite& suite,
                                                  const SuiteState& st) {
  if (!st.is_inner()) throw Error("cannot expand a verdict state");
  if (static_cast<int>(st.sigma.size()) >= suite.depth())
    throw Error("cannot expand a state at the depth frontier");
  const TestSuite::Node* node = suite.find(st.sigma);
  if (!node) throw Error("state is not part of this suite");

  std::vector<std::pair<Action, SuiteState>> out;
  for (const auto& [a, targets] : node->edges) {
    if (targets.inner) {
      Trace ext = st.sigma.extended(a);
      const TestSuite::Node* child = suite.find(ext);
      if (!child) throw Error("suite is missing inner child for " + ext.back().name);
      out.emplace_back(a, SuiteState::inner(child->x, std::move(ext)));
    }
    if (targets.pass) out.emplace_back(a, SuiteState::pass());
    if (targets.fail) out.emplace_back(a, SuiteState::fail());
  }
  return out;
}

std::string TestCase::to_string() const {
  std::ostringstream os;
  for (const auto& [sigma, node] : nodes) {
    os << '"' << trace_to_string(sigma) << "\" ";
    if (node.offered_input) os << "offer " << node.offered_input->name;
    else os << "observe";
    os << "\n";
  }
  return os.str();
}

namespace {

using Fragment = std::map<Trace, TestCase::Node>;

struct CaseBuilder {
  const TestSuite& suite;
  std::size_t limit;

  std::vector<Fragment> generate(const Trace& sigma) {
    const TestSuite::Node* node = suite.find(sigma);
    TestCase::Node base;
    base.x = node->x;

    // Observations are routed maximally: into the child when the suite still
    // has one, otherwise to the verdict the suite assigns.
    std::vector<Trace> fixed_children;
    for (const auto& [a, targets] : node->edges) {
      if (a.is_input()) continue;
      if (targets.inner) {
        base.routes[a] = TestCase::Route::Child;
        fixed_children.push_back(sigma.extended(a));
      } else if (targets.pass) {
        base.routes[a] = TestCase::Route::Pass;
      } else {
        base.routes[a] = TestCase::Route::Fail;
      }
    }

    std::vector<std::optional<Action>> choices{std::nullopt};
    for (const auto& [a, targets] : node->edges)
      if (a.is_input() && targets.inner) choices.emplace_back(a);

    std::vector<Fragment> out;
    for (const std::optional<Action>& choice : choices) {
      TestCase::Node variant = base;
      std::vector<Trace> children = fixed_children;
      if (choice) {
        variant.offered_input = *choice;
        variant.routes[*choice] = TestCase::Route::Child;
        children.push_back(sigma.extended(*choice));
      }

      std::vector<Fragment> combos{{}};
      for (const Trace& child : children) {
        std::vector<Fragment> child_frags = generate(child);
        std::vector<Fragment> grown;
        grown.reserve(combos.size() * child_frags.size());
        for (const Fragment& combo : combos)
          for (const Fragment& frag : child_frags) {
            Fragment merged = combo;
            merged.insert(frag.begin(), frag.end());
            grown.push_back(std::move(merged));
            if (limit && grown.size() > limit)
              throw Error("test-case extraction exceeds limit of " +
                          std::to_string(limit) + "; reduce the depth");
          }
        combos = std::move(grown);
      }

      for (Fragment& combo : combos) {
        combo.emplace(sigma, variant);
        out.push_back(std::move(combo));
        if (limit && out.size() > limit)
          throw Error("test-case extraction exceeds limit of " +
                      std::to_string(limit) + "; reduce the depth");
      }
    }
    return out;
  }
};

}  // namespace

std::vector<TestCase> extract_test_cases(const TestSuite& suite, std::size_t limit) {
  CaseBuilder builder{suite, limit};
  std::vector<Fragment> fragments = builder.generate(Trace{});
  std::vector<TestCase> out;
  out.reserve(fragments.size());
  for (Fragment& f : fragments) out.push_back(TestCase{std::move(f)});
  return out;
}

}  // namespace ftskit
