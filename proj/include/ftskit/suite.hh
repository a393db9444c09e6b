#pragma once

#include <optional>

#include "ftskit/projection.hh"

namespace ftskit {

/// A state of a test suite: an Inner state (the subset-construction
/// component X paired with the trace that reached it) or a verdict.
/// Verdict states absorb: their self-loops are implicit.
struct SuiteState {
  enum class Kind { Inner, Pass, Fail };
  Kind kind = Kind::Pass;
  std::vector<std::string> x;  // Inner only; sorted state names
  Trace sigma;                 // Inner only

  static SuiteState inner(std::vector<std::string> x, Trace sigma);
  static SuiteState pass() { return {Kind::Pass, {}, {}}; }
  static SuiteState fail() { return {Kind::Fail, {}, {}}; }

  bool is_inner() const { return kind == Kind::Inner; }
  std::string to_string() const;
  friend bool operator==(const SuiteState&, const SuiteState&) = default;
};

/// The depth-bounded test suite of a feature specification.
///
/// Inner states are keyed by their trace (the subset construction makes the
/// X component a function of the trace, so the suite is a tree). Per node
/// and action the suite records which of the three targets exist: the inner
/// child (trace extended by the action), Pass, and Fail. Every declared
/// output and delta has a verdict edge at every Inner node: allowed
/// observations go to Pass (and to the child while under the depth bound),
/// forbidden ones to Fail. Inputs only ever lead to inner children, and only
/// under the depth bound.
class TestSuite {
 public:
  struct EdgeTargets {
    bool inner = false;
    bool pass = false;
    bool fail = false;
  };
  struct Node {
    std::vector<std::string> x;  // sorted
    std::map<Action, EdgeTargets> edges;
  };

  TestSuite(FeatureSpec spec, int depth, std::map<Trace, Node> nodes);

  const FeatureSpec& spec() const { return spec_; }
  int depth() const { return depth_; }
  /// The projection formula, carried as metadata on every edge.
  const Formula& guard_label() const { return spec_.phi(); }

  SuiteState root() const;
  const Node* find(const Trace& sigma) const;
  bool has_inner(const Trace& sigma) const { return find(sigma) != nullptr; }
  const std::map<Trace, Node>& nodes() const { return nodes_; }

  /// Declared inputs of the base model, as actions, sorted.
  const std::vector<Action>& input_actions() const { return inputs_; }
  /// Declared outputs plus delta, sorted: the observation alphabet.
  const std::vector<Action>& observation_actions() const { return observations_; }

 private:
  FeatureSpec spec_;
  int depth_;
  std::map<Trace, Node> nodes_;
  std::vector<Action> inputs_;
  std::vector<Action> observations_;
};

/// Root state: the tau-closure of the initial state, with the empty trace.
SuiteState suite_root(const FeatureSpec& spec);

/// Breadth-first construction truncated at trace length `depth`. Frontier
/// nodes keep their verdict edges but have no inner children.
TestSuite build_suite(const FeatureSpec& spec, int depth);

/// Outgoing edges of an Inner state as (action, target) pairs, sorted by
/// action then target kind. Expanding a verdict state or a state already at
/// the depth frontier is a contract violation.
std::vector<std::pair<Action, SuiteState>> expand(const TestSuite& suite,
                                                  const SuiteState& st);

/// One executable experiment: a deterministic, observation-complete tree
/// sliced out of a suite. Each node offers at most one input; every output
/// and delta is routed to the inner child when the suite has one, else to
/// its verdict.
struct TestCase {
  enum class Route { Child, Pass, Fail };
  struct Node {
    std::vector<std::string> x;
    std::optional<Action> offered_input;  // nullopt: observe only
    std::map<Action, Route> routes;
  };
  std::map<Trace, Node> nodes;  // prefix-closed tree keyed by trace

  std::string to_string() const;
};

/// All test cases of the suite: one per combination of per-node input
/// choices (each available input or none). Counts grow combinatorially with
/// depth; a nonzero `limit` aborts with an error once exceeded.
std::vector<TestCase> extract_test_cases(const TestSuite& suite, std::size_t limit = 0);

}  // namespace ftskit
