#include "ftskit/dot.hh"

#include <algorithm>
#include <sstream>

#include "ftskit/text.hh"

namespace ftskit {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string action_token(const Action& a) {
  switch (a.kind) {
    case ActionKind::Input:
      return "?" + a.name;
    case ActionKind::Output:
      return "!" + a.name;
    case ActionKind::Delta:
      return "delta";
    case ActionKind::Tau:
      return "tau";
  }
  return a.name;
}

std::string set_label(const std::vector<std::string>& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i != 0) out += ",";
    out += x[i];
  }
  out += "}";
  return out;
}

}  // namespace

std::string to_dot(const Iofts& m) {
  std::ostringstream out;
  out << "digraph \"" << escape(m.name) << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  \"__init\" [shape=point label=\"\"];\n";
  out << "  \"__init\" -> \"" << escape(m.initial) << "\";\n";
  for (const std::string& s : m.states) {
    out << "  \"" << escape(s) << "\";\n";
  }
  std::vector<std::string> edges;
  edges.reserve(m.transitions.size());
  for (const Transition& t : m.transitions) {
    edges.push_back("  \"" + escape(t.src) + "\" -> \"" + escape(t.dst) + "\" [label=\"" +
                    escape(action_token(t.action) + " [" + t.guard.to_string() + "]") + "\"];\n");
  }
  std::sort(edges.begin(), edges.end());
  for (const std::string& e : edges) out << e;
  out << "}\n";
  return out.str();
}

std::string to_dot(const TestSuite& suite) {
  std::ostringstream out;
  const Iofts& base = suite.spec().base();
  out << "digraph \"" << escape(base.name) << "-suite\" {\n";
  out << "  rankdir=TB;\n";
  out << "  label=\"suite of " << escape(base.name) << " under " << escape(suite.guard_label().to_string())
      << ", depth " << suite.depth() << "\";\n";
  out << "  node [shape=circle];\n";

  std::map<Trace, std::size_t> ids;
  for (const auto& [trace, node] : suite.nodes()) {
    (void)node;
    ids.emplace(trace, ids.size());
  }

  bool pass_used = false;
  bool fail_used = false;
  for (const auto& [trace, node] : suite.nodes()) {
    for (const auto& [action, targets] : node.edges) {
      (void)action;
      pass_used = pass_used || targets.pass;
      fail_used = fail_used || targets.fail;
    }
  }
  if (pass_used) out << "  \"pass\" [shape=doublecircle];\n";
  if (fail_used) out << "  \"fail\" [shape=square];\n";

  for (const auto& [trace, node] : suite.nodes()) {
    const std::string trace_label = trace.empty() ? "\xCE\xB5" : trace_to_string(trace);
    out << "  n" << ids.at(trace) << " [label=\"" << escape(set_label(node.x)) << "\\n"
        << escape(trace_label) << "\"];\n";
  }
  out << "  \"__init\" [shape=point label=\"\"];\n";
  out << "  \"__init\" -> n" << ids.at(Trace{}) << ";\n";

  for (const auto& [trace, node] : suite.nodes()) {
    std::string to_pass;
    std::string to_fail;
    for (const auto& [action, targets] : node.edges) {
      if (targets.inner) {
        out << "  n" << ids.at(trace) << " -> n" << ids.at(trace.extended(action)) << " [label=\""
            << escape(action.name) << "\"];\n";
      }
      if (targets.pass) to_pass += (to_pass.empty() ? "" : ", ") + action.name;
      if (targets.fail) to_fail += (to_fail.empty() ? "" : ", ") + action.name;
    }
    if (!to_pass.empty()) {
      out << "  n" << ids.at(trace) << " -> \"pass\" [label=\"" << escape(to_pass) << "\"];\n";
    }
    if (!to_fail.empty()) {
      out << "  n" << ids.at(trace) << " -> \"fail\" [label=\"" << escape(to_fail) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ftskit
