#include <algorithm>

#include "doctest.h"
#include "fixtures.hh"
#include "ftskit/exec.hh"
#include "ftskit/text.hh"

using namespace ftskit;

namespace {

FeatureSpec line_spec() {
  return project(fixtures::cruise(), fixtures::phi("cc", *fixtures::cruise()));
}

FeatureSpec faulty_impl() { return project(fixtures::faulty(), Formula::constant(true)); }

Trace tr(const std::string& text) { return fixtures::trace(text, *fixtures::cruise()); }

bool length_then_lex_sorted(const std::vector<Trace>& ts) {
  return std::is_sorted(ts.begin(), ts.end(), [](const Trace& a, const Trace& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

}  // namespace

TEST_CASE("a model port tracks the tau-closed configuration") {
  ModelPort port(faulty_impl());
  CHECK(port.configuration() == std::set<std::string>{"t0"});

  CHECK(port.apply(Action::delta()));            // t0 is quiescent
  CHECK(port.apply(Action::input("on")));
  CHECK(port.configuration() == std::set<std::string>{"t1"});
  CHECK(port.apply(Action::output("rgl")));      // self-loop at t1
  CHECK_FALSE(port.apply(Action::output("srgl")));
  CHECK_FALSE(port.apply(Action::delta()));      // t1 emits rgl, never quiet
  CHECK(port.apply(Action::input("det")));
  CHECK(port.configuration() == std::set<std::string>{"t5"});

  port.reset();
  CHECK(port.configuration() == std::set<std::string>{"t0"});
}

TEST_CASE("replay reruns a trace from reset, optionally absorbing refused inputs") {
  ModelPort port(faulty_impl());
  CHECK(port.replay(tr("on off on det")));
  CHECK_FALSE(port.replay(tr("off on")));       // off is refused at t0
  CHECK(port.replay(tr("off on"), /*angelic_inputs=*/true));
  CHECK(port.configuration() == std::set<std::string>{"t1"});
  CHECK_FALSE(port.replay(tr("on srgl"), true)); // outputs are never angelic
}

TEST_CASE("sync_step pairs suite targets with implementation configurations") {
  const TestSuite suite = build_suite(line_spec(), 2);
  const FeatureSpec impl = faulty_impl();
  const SuiteState root = suite.root();

  const auto on = sync_step(suite, root, {"t0"}, Action::input("on"), impl);
  REQUIRE(on.size() == 1);
  CHECK(on[0].first.is_inner());
  CHECK(on[0].first.sigma == tr("on"));
  CHECK(on[0].second == std::set<std::string>{"t1"});

  // Quiescence at the root goes to both the child and Pass.
  const auto quiet = sync_step(suite, root, {"t0"}, Action::delta(), impl);
  REQUIRE(quiet.size() == 2);
  CHECK(quiet[0].first.is_inner());
  CHECK(quiet[1].first == SuiteState::pass());

  // The implementation cannot emit rgl at t0, so nothing synchronizes.
  CHECK(sync_step(suite, root, {"t0"}, Action::output("rgl"), impl).empty());
  CHECK_THROWS_AS(sync_step(suite, SuiteState::pass(), {"t0"}, Action::delta(), impl),
                  Error);
}

TEST_CASE("the faulty implementation fails the family suite with a shortest witness") {
  const TestSuite suite = build_suite(line_spec(), 5);
  const RunResult result = run_suite(suite, faulty_impl());
  CHECK_FALSE(result.passed());
  REQUIRE(!result.failing_traces.empty());
  CHECK(result.failing_traces.front() == tr("on off on det rgl"));
  CHECK(length_then_lex_sorted(result.failing_traces));
  CHECK(result.explored > 0);
}

TEST_CASE("derived products pass their own family suite") {
  const Iofts& m = *fixtures::cruise();
  const TestSuite suite = build_suite(line_spec(), 5);
  for (const char* name : {"l1", "l2"}) {
    const FeatureSpec impl = derive_product(m, fixtures::product(m, name));
    CHECK(run_suite(suite, impl).passed());
    CHECK(conforms(impl, line_spec(), 5));
  }
  CHECK_FALSE(conforms(faulty_impl(), line_spec(), 5));
}

TEST_CASE("running through a model port agrees with the in-process runner") {
  const TestSuite suite = build_suite(line_spec(), 4);

  for (const FeatureSpec& impl :
       {faulty_impl(), derive_product(*fixtures::cruise(),
                                      fixtures::product(*fixtures::cruise(), "l2"))}) {
    const RunResult direct = run_suite(suite, impl);
    ModelPort port(impl);
    const RunResult sampled = run_suite(suite, port);
    CHECK(direct.verdict == sampled.verdict);
    CHECK(direct.failing_traces == sampled.failing_traces);
  }
}

TEST_CASE("assume_input_enabled drives inputs the implementation refuses") {
  const Iofts idle = load_model_from_string(
      "iofts idle\ninitial q0\nproduct only\n", "idle");
  const FeatureSpec impl = project(idle, Formula::constant(true));
  const TestSuite suite = build_suite(line_spec(), 2);

  CHECK(run_suite(suite, impl).passed());  // refused inputs end exploration

  RunOptions opts;
  opts.assume_input_enabled = true;
  const RunResult pushed = run_suite(suite, impl, opts);
  CHECK_FALSE(pushed.passed());
  CHECK(std::find(pushed.failing_traces.begin(), pushed.failing_traces.end(),
                  tr("on delta")) != pushed.failing_traces.end());
}

TEST_CASE("check_input_enabled lists every untreated reachable input") {
  const auto missing = check_input_enabled(line_spec());
  REQUIRE(missing.size() == 8);
  CHECK(missing[0] == std::pair<std::string, Action>{"s0", Action::input("det")});
  CHECK(missing[1] == std::pair<std::string, Action>{"s0", Action::input("nor")});
  CHECK(missing[2] == std::pair<std::string, Action>{"s0", Action::input("off")});
  CHECK(missing[3] == std::pair<std::string, Action>{"s1", Action::input("nor")});
  CHECK(missing[4] == std::pair<std::string, Action>{"s1", Action::input("on")});
  CHECK(missing[5].first == "s2");

  // A genuinely input-enabled model reports nothing.
  const Iofts loop = load_model_from_string(
      "iofts loop\ninputs tick\ninitial q0\ntrans q0 ?tick q0\nproduct only\n", "loop");
  CHECK(check_input_enabled(project(loop, Formula::constant(true))).empty());
}
