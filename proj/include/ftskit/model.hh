#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ftskit/formula.hh"

namespace ftskit {

enum class ActionKind { Input, Output, Tau, Delta };

/// A transition label. `tau` and `delta` are reserved names: tau is the
/// internal action and never occurs in traces; delta is the quiescence
/// observation and is synthesized by projection, never declared in models.
struct Action {
  std::string name;
  ActionKind kind = ActionKind::Tau;

  static Action input(std::string name) { return {std::move(name), ActionKind::Input}; }
  static Action output(std::string name) { return {std::move(name), ActionKind::Output}; }
  static Action tau() { return {"tau", ActionKind::Tau}; }
  static Action delta() { return {"delta", ActionKind::Delta}; }

  bool is_input() const { return kind == ActionKind::Input; }
  bool is_tau() const { return kind == ActionKind::Tau; }
  bool is_delta() const { return kind == ActionKind::Delta; }
  /// Outputs and delta: what a tester observes rather than supplies.
  bool is_observation() const {
    return kind == ActionKind::Output || kind == ActionKind::Delta;
  }

  auto operator<=>(const Action&) const = default;
};

/// A sequence of visible actions (inputs, outputs, delta). The internal
/// action tau is unrepresentable here: construction and append reject it.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<Action> actions);

  void append(Action a);
  Trace extended(Action a) const;

  std::size_t size() const { return actions_.size(); }
  bool empty() const { return actions_.empty(); }
  const Action& operator[](std::size_t i) const { return actions_[i]; }
  const Action& back() const { return actions_.back(); }
  auto begin() const { return actions_.begin(); }
  auto end() const { return actions_.end(); }

  Trace prefix(std::size_t length) const;
  Trace suffix(std::size_t from) const;
  bool is_prefix_of(const Trace& other) const;
  bool is_subsequence_of(const Trace& other) const;

  auto operator<=>(const Trace&) const = default;

 private:
  std::vector<Action> actions_;
};

struct Transition {
  std::string src;
  Action action;
  Formula guard;
  std::string dst;
};

struct Diagnostic {
  std::string clause;   // which well-formedness clause is violated
  std::string message;  // the offending element
  std::string to_string() const { return clause + ": " + message; }
};

/// An input-output featured transition system: states with guarded
/// transitions over a partitioned action alphabet, a feature set, and the
/// product configurations the model ships with.
struct Iofts {
  std::string name;
  std::vector<std::string> states;  // declaration (first-mention) order
  std::string initial;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<FeatureId> features;
  std::vector<Transition> transitions;
  std::vector<ProductConfig> products;

  bool has_state(const std::string& s) const;
  bool is_input_name(const std::string& n) const;
  bool is_output_name(const std::string& n) const;
  /// Resolves a visible-action name against the declared alphabet
  /// ("delta" resolves to the quiescence action); nullopt when unknown.
  std::optional<Action> action_named(const std::string& n) const;
};

/// Well-formedness diagnostics: declared/endpoint membership, disjoint
/// alphabets, reserved names, guard feature scope, guard uniqueness per
/// (src, action, dst), and totality of every product configuration.
std::vector<Diagnostic> validate(const Iofts& m);

/// States reachable from `state` along transition edges, ignoring guards.
std::set<std::string> reach(const Iofts& m, const std::string& state);

/// Successor index over a fixed edge set with tau-closure machinery.
/// Guards play no role here: edges passed in are taken as enabled.
class StepRelation {
 public:
  StepRelation() = default;
  explicit StepRelation(const std::vector<Transition>& edges);

  /// `from` closed under tau edges.
  std::set<std::string> tau_closure(std::set<std::string> from) const;
  /// One visible step: a-successors of `from`, tau-closed.
  std::set<std::string> successors(const std::set<std::string>& from,
                                   const Action& a) const;
  /// Fold of successors over the trace; `from` is tau-closed first.
  std::set<std::string> run(const std::set<std::string>& from, const Trace& t) const;

  /// Distinct visible actions occurring on edges, sorted.
  const std::vector<Action>& visible_actions() const { return visible_; }

 private:
  std::map<std::string, std::vector<std::pair<Action, std::string>>> out_;
  std::vector<Action> visible_;
};

/// Step relation of a raw model: edges whose guard some product satisfies.
/// Raw models have no delta edges; suspension traces require projection.
StepRelation raw_step_relation(const Iofts& m);

/// steps(sys, from, t): subset construction with tau absorbed.
std::set<std::string> steps(const StepRelation& rel,
                            const std::set<std::string>& from, const Trace& t);

/// All traces of length <= depth executable from `init` (prefix-closed,
/// always contains the empty trace).
std::set<Trace> straces_upto(const StepRelation& rel,
                             const std::set<std::string>& init, int depth);

}  // namespace ftskit
