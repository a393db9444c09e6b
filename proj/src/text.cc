#include "ftskit/text.hh"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ftskit {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw Error(origin + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Iofts load_model(std::istream& in, const std::string& origin) {
  Iofts m;
  bool saw_header = false, saw_initial = false;
  bool saw_features = false, saw_inputs = false, saw_outputs = false;
  std::vector<std::string> mention_order;
  std::set<std::string> mentioned;
  auto mention = [&](const std::string& s) {
    if (mentioned.insert(s).second) mention_order.push_back(s);
  };

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tok = split_ws(raw);
    if (tok.empty()) continue;
    const std::string& directive = tok[0];

    if (directive == "iofts") {
      if (saw_header) fail(origin, lineno, "duplicate iofts line");
      if (tok.size() != 2 || !valid_identifier(tok[1]))
        fail(origin, lineno, "expected: iofts <name>");
      m.name = tok[1];
      saw_header = true;
    } else if (directive == "features" || directive == "inputs" ||
               directive == "outputs") {
      bool& seen = directive == "features" ? saw_features
                   : directive == "inputs" ? saw_inputs
                                           : saw_outputs;
      if (seen) fail(origin, lineno, "duplicate " + directive + " line");
      seen = true;
      auto& dst = directive == "features" ? m.features
                  : directive == "inputs" ? m.inputs
                                          : m.outputs;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!valid_identifier(tok[i]))
          fail(origin, lineno, "invalid identifier '" + tok[i] + "'");
        dst.push_back(tok[i]);
      }
    } else if (directive == "initial") {
      if (saw_initial) fail(origin, lineno, "duplicate initial line");
      if (tok.size() != 2 || !valid_identifier(tok[1]))
        fail(origin, lineno, "expected: initial <state>");
      m.initial = tok[1];
      saw_initial = true;
      mention(m.initial);
    } else if (directive == "trans") {
      // Guard text may contain spaces: split the raw line at the bracket.
      std::string head = raw, guard_text = "true";
      if (auto open = raw.find('['); open != std::string::npos) {
        auto close = raw.rfind(']');
        if (close == std::string::npos || close < open)
          fail(origin, lineno, "unterminated guard bracket");
        guard_text = raw.substr(open + 1, close - open - 1);
        head = raw.substr(0, open);
        if (!split_ws(raw.substr(close + 1)).empty())
          fail(origin, lineno, "trailing tokens after guard");
      }
      std::vector<std::string> part = split_ws(head);
      if (part.size() != 4)
        fail(origin, lineno, "expected: trans <src> <action> <dst> [guard]");
      const std::string &src = part[1], &act = part[2], &dst = part[3];
      if (!valid_identifier(src) || !valid_identifier(dst))
        fail(origin, lineno, "invalid state name in transition");
      Action action;
      if (act == "tau") {
        action = Action::tau();
      } else if (act == "delta") {
        fail(origin, lineno, "delta cannot appear in model files; it is synthesized by projection");
      } else if (act.size() > 1 && (act[0] == '?' || act[0] == '!')) {
        std::string name = act.substr(1);
        if (!valid_identifier(name))
          fail(origin, lineno, "invalid action name '" + name + "'");
        if (act[0] == '?') {
          if (!m.is_input_name(name))
            fail(origin, lineno, "input '" + name + "' not declared");
          action = Action::input(name);
        } else {
          if (!m.is_output_name(name))
            fail(origin, lineno, "output '" + name + "' not declared");
          action = Action::output(name);
        }
      } else {
        fail(origin, lineno, "action must be ?<input>, !<output>, or tau");
      }
      Formula guard;
      try {
        guard = parse_formula(guard_text, m.features);
      } catch (const Error& e) {
        fail(origin, lineno, std::string("bad guard: ") + e.what());
      }
      mention(src);
      mention(dst);
      m.transitions.push_back({src, std::move(action), std::move(guard), dst});
    } else if (directive == "product") {
      if (tok.size() < 2 || !valid_identifier(tok[1]))
        fail(origin, lineno, "expected: product <name> <feature>=0|1 ...");
      ProductConfig p;
      p.name = tok[1];
      for (std::size_t i = 2; i < tok.size(); ++i) {
        auto eq = tok[i].find('=');
        if (eq == std::string::npos)
          fail(origin, lineno, "expected <feature>=0|1, got '" + tok[i] + "'");
        std::string f = tok[i].substr(0, eq), v = tok[i].substr(eq + 1);
        if (!valid_identifier(f) || (v != "0" && v != "1"))
          fail(origin, lineno, "expected <feature>=0|1, got '" + tok[i] + "'");
        if (p.assignment.count(f))
          fail(origin, lineno, "product '" + p.name + "' assigns '" + f + "' twice");
        p.assignment[f] = (v == "1");
      }
      m.products.push_back(std::move(p));
    } else {
      fail(origin, lineno, "unknown directive '" + directive + "'");
    }
  }

  if (!saw_header) throw Error(origin + ": missing iofts header line");
  if (!saw_initial) throw Error(origin + ": missing initial line");
  m.states = std::move(mention_order);

  std::vector<Diagnostic> diags = validate(m);
  if (!diags.empty()) {
    std::ostringstream os;
    os << origin << ": model is ill-formed:";
    for (const Diagnostic& d : diags) os << "\n  " << d.to_string();
    throw Error(os.str());
  }
  return m;
}

Iofts load_model_from_string(std::string_view text, const std::string& origin) {
  std::istringstream is{std::string(text)};
  return load_model(is, origin);
}

Iofts load_model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  return load_model(in, path);
}

namespace {

std::string action_token(const Action& a) {
  switch (a.kind) {
    case ActionKind::Input: return "?" + a.name;
    case ActionKind::Output: return "!" + a.name;
    case ActionKind::Tau: return "tau";
    case ActionKind::Delta: return "delta";
  }
  return a.name;
}

void print_header(std::ostream& os, const Iofts& m) {
  os << "iofts " << m.name << "\n";
  if (!m.features.empty()) {
    os << "features";
    for (const auto& f : m.features) os << ' ' << f;
    os << "\n";
  }
  if (!m.inputs.empty()) {
    os << "inputs";
    for (const auto& i : m.inputs) os << ' ' << i;
    os << "\n";
  }
  if (!m.outputs.empty()) {
    os << "outputs";
    for (const auto& o : m.outputs) os << ' ' << o;
    os << "\n";
  }
  os << "initial " << m.initial << "\n";
}

void print_transition(std::ostream& os, const Transition& t) {
  os << "trans " << t.src << ' ' << action_token(t.action) << ' ' << t.dst << " ["
     << t.guard.to_string() << "]\n";
}

void print_products(std::ostream& os, const std::vector<ProductConfig>& products,
                    const std::vector<FeatureId>& features) {
  for (const ProductConfig& p : products) {
    os << "product " << p.name;
    for (const FeatureId& f : features)
      os << ' ' << f << '=' << (p.value_of(f) ? '1' : '0');
    os << "\n";
  }
}

}  // namespace

std::string print_model(const Iofts& m) {
  std::ostringstream os;
  print_header(os, m);
  for (const Transition& t : m.transitions) print_transition(os, t);
  print_products(os, m.products, m.features);
  return os.str();
}

std::string print_spec(const FeatureSpec& spec) {
  std::ostringstream os;
  print_header(os, spec.base());
  for (const Transition& t : spec.transitions()) print_transition(os, t);
  print_products(os, spec.products(), spec.base().features);
  return os.str();
}

std::string trace_to_string(const Trace& t) {
  std::string out;
  for (const Action& a : t) {
    if (!out.empty()) out += ' ';
    out += a.name;
  }
  return out;
}

Trace parse_trace(std::string_view text, const Iofts& m) {
  Trace t;
  for (const std::string& tok : split_ws(std::string(text))) {
    std::optional<Action> a = m.action_named(tok);
    if (!a) throw Error("unknown action '" + tok + "' in trace");
    t.append(std::move(*a));
  }
  return t;
}

}  // namespace ftskit
