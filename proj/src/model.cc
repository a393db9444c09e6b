#include "ftskit/model.hh"

#include <algorithm>
#include <deque>

namespace ftskit {

Trace::Trace(std::vector<Action> actions) : actions_(std::move(actions)) {
  for (const Action& a : actions_)
    if (a.is_tau()) throw Error("tau cannot occur in a trace");
}

void Trace::append(Action a) {
  if (a.is_tau()) throw Error("tau cannot occur in a trace");
  actions_.push_back(std::move(a));
}

Trace Trace::extended(Action a) const {
  Trace t = *this;
  t.append(std::move(a));
  return t;
}

Trace Trace::prefix(std::size_t length) const {
  Trace t;
  t.actions_.assign(actions_.begin(), actions_.begin() + std::min(length, size()));
  return t;
}

Trace Trace::suffix(std::size_t from) const {
  Trace t;
  if (from < size()) t.actions_.assign(actions_.begin() + from, actions_.end());
  return t;
}

bool Trace::is_prefix_of(const Trace& other) const {
  if (size() > other.size()) return false;
  return std::equal(begin(), end(), other.begin());
}

bool Trace::is_subsequence_of(const Trace& other) const {
  auto it = begin();
  for (const Action& a : other) {
    if (it == end()) break;
    if (a == *it) ++it;
  }
  return it == end();
}

bool Iofts::has_state(const std::string& s) const {
  return std::find(states.begin(), states.end(), s) != states.end();
}

bool Iofts::is_input_name(const std::string& n) const {
  return std::find(inputs.begin(), inputs.end(), n) != inputs.end();
}

bool Iofts::is_output_name(const std::string& n) const {
  return std::find(outputs.begin(), outputs.end(), n) != outputs.end();
}

std::optional<Action> Iofts::action_named(const std::string& n) const {
  if (n == "delta") return Action::delta();
  if (is_input_name(n)) return Action::input(n);
  if (is_output_name(n)) return Action::output(n);
  return std::nullopt;
}

namespace {

template <typename Seq>
std::vector<std::string> duplicates(const Seq& names) {
  std::set<std::string> seen, dup;
  for (const auto& n : names)
    if (!seen.insert(n).second) dup.insert(n);
  return {dup.begin(), dup.end()};
}

}  // namespace

std::vector<Diagnostic> validate(const Iofts& m) {
  std::vector<Diagnostic> out;
  auto flag = [&out](std::string clause, std::string message) {
    out.push_back({std::move(clause), std::move(message)});
  };

  if (m.states.empty()) flag("states", "model declares no states");
  for (const auto& d : duplicates(m.states)) flag("states", "duplicate state '" + d + "'");
  if (!m.states.empty() && !m.has_state(m.initial))
    flag("initial", "initial state '" + m.initial + "' is not a state of the model");

  for (const auto& d : duplicates(m.inputs)) flag("alphabet", "duplicate input '" + d + "'");
  for (const auto& d : duplicates(m.outputs)) flag("alphabet", "duplicate output '" + d + "'");
  for (const std::string& n : m.inputs)
    if (m.is_output_name(n)) flag("alphabet", "'" + n + "' declared both input and output");
  for (const std::string& n : m.inputs)
    if (n == "tau" || n == "delta") flag("alphabet", "reserved action name '" + n + "'");
  for (const std::string& n : m.outputs)
    if (n == "tau" || n == "delta") flag("alphabet", "reserved action name '" + n + "'");

  for (const auto& d : duplicates(m.features)) flag("features", "duplicate feature '" + d + "'");
  for (const FeatureId& f : m.features)
    if (f == "true" || f == "false")
      flag("features", "reserved word '" + f + "' used as feature name");

  std::set<FeatureId> feature_set(m.features.begin(), m.features.end());
  // Guard uniqueness: at most one guard per (src, action, dst). Transitions
  // repeating a triple with a syntactically equal guard denote one set
  // element and are tolerated.
  std::map<std::tuple<std::string, Action, std::string>, Formula> guards_seen;
  for (const Transition& t : m.transitions) {
    std::string where = t.src + " --" + t.action.name + "--> " + t.dst;
    if (!m.has_state(t.src))
      flag("transitions", "transition from undeclared state '" + t.src + "'");
    if (!m.has_state(t.dst))
      flag("transitions", "transition to undeclared state '" + t.dst + "'");
    switch (t.action.kind) {
      case ActionKind::Input:
        if (!m.is_input_name(t.action.name))
          flag("transitions", "undeclared input '" + t.action.name + "' in " + where);
        break;
      case ActionKind::Output:
        if (!m.is_output_name(t.action.name))
          flag("transitions", "undeclared output '" + t.action.name + "' in " + where);
        break;
      case ActionKind::Tau:
        break;
      case ActionKind::Delta:
        flag("transitions", "delta transition in base model: " + where);
        break;
    }
    for (const FeatureId& v : t.guard.variables())
      if (!feature_set.count(v))
        flag("guards", "guard of " + where + " references undeclared feature '" + v + "'");
    auto key = std::make_tuple(t.src, t.action, t.dst);
    auto [it, inserted] = guards_seen.emplace(key, t.guard);
    if (!inserted && !syntactically_equal(it->second, t.guard))
      flag("guard-uniqueness", "conflicting guards for " + where + ": '" +
                                   it->second.to_string() + "' vs '" +
                                   t.guard.to_string() + "'");
  }

  std::vector<std::string> product_names;
  for (const ProductConfig& p : m.products) product_names.push_back(p.name);
  for (const auto& d : duplicates(product_names))
    flag("products", "duplicate product name '" + d + "'");
  for (const ProductConfig& p : m.products) {
    for (const FeatureId& f : m.features)
      if (!p.assignment.count(f))
        flag("products", "product '" + p.name + "' missing assignment for feature '" + f + "'");
    for (const auto& entry : p.assignment)
      if (!feature_set.count(entry.first))
        flag("products",
             "product '" + p.name + "' assigns undeclared feature '" + entry.first + "'");
  }

  return out;
}

std::set<std::string> reach(const Iofts& m, const std::string& state) {
  std::set<std::string> seen{state};
  std::deque<std::string> work{state};
  while (!work.empty()) {
    std::string s = work.front();
    work.pop_front();
    for (const Transition& t : m.transitions)
      if (t.src == s && seen.insert(t.dst).second) work.push_back(t.dst);
  }
  return seen;
}

StepRelation::StepRelation(const std::vector<Transition>& edges) {
  std::set<Action> vis;
  for (const Transition& t : edges) {
    out_[t.src].emplace_back(t.action, t.dst);
    if (!t.action.is_tau()) vis.insert(t.action);
  }
  visible_.assign(vis.begin(), vis.end());
}

std::set<std::string> StepRelation::tau_closure(std::set<std::string> from) const {
  std::deque<std::string> work(from.begin(), from.end());
  while (!work.empty()) {
    std::string s = work.front();
    work.pop_front();
    auto it = out_.find(s);
    if (it == out_.end()) continue;
    for (const auto& [a, dst] : it->second)
      if (a.is_tau() && from.insert(dst).second) work.push_back(dst);
  }
  return from;
}

std::set<std::string> StepRelation::successors(const std::set<std::string>& from,
                                               const Action& a) const {
  std::set<std::string> next;
  for (const std::string& s : from) {
    auto it = out_.find(s);
    if (it == out_.end()) continue;
    for (const auto& [b, dst] : it->second)
      if (b == a) next.insert(dst);
  }
  return tau_closure(std::move(next));
}

std::set<std::string> StepRelation::run(const std::set<std::string>& from,
                                        const Trace& t) const {
  std::set<std::string> cur = tau_closure(from);
  for (const Action& a : t) {
    if (cur.empty()) return cur;
    cur = successors(cur, a);
  }
  return cur;
}

StepRelation raw_step_relation(const Iofts& m) {
  std::vector<Transition> enabled;
  for (const Transition& t : m.transitions)
    if (!sat_in(t.guard, m.products).empty()) enabled.push_back(t);
  return StepRelation(enabled);
}

std::set<std::string> steps(const StepRelation& rel,
                            const std::set<std::string>& from, const Trace& t) {
  return rel.run(from, t);
}

std::set<Trace> straces_upto(const StepRelation& rel,
                             const std::set<std::string>& init, int depth) {
  std::set<Trace> traces;
  std::deque<std::pair<Trace, std::set<std::string>>> work;
  std::set<std::string> start = rel.tau_closure(init);
  if (start.empty()) return traces;
  traces.insert(Trace{});
  work.emplace_back(Trace{}, std::move(start));
  while (!work.empty()) {
    auto [t, states] = std::move(work.front());
    work.pop_front();
    if (static_cast<int>(t.size()) >= depth) continue;
    for (const Action& a : rel.visible_actions()) {
      std::set<std::string> next = rel.successors(states, a);
      if (next.empty()) continue;
      Trace ext = t.extended(a);
      if (traces.insert(ext).second) work.emplace_back(std::move(ext), std::move(next));
    }
  }
  return traces;
}

}  // namespace ftskit
