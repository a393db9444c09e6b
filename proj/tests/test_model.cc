#include <algorithm>

#include "doctest.h"
#include "fixtures.hh"
#include "ftskit/model.hh"

using namespace ftskit;

namespace {

bool has_clause(const std::vector<Diagnostic>& ds, const std::string& clause) {
  return std::any_of(ds.begin(), ds.end(),
                     [&](const Diagnostic& d) { return d.clause == clause; });
}

}  // namespace

TEST_CASE("actions order by name before kind") {
  CHECK(Action::delta() < Action::input("det"));
  CHECK(Action::input("on") < Action::output("rgl"));
  CHECK(Action::input("x") < Action::output("x"));  // same name, kind breaks the tie
  CHECK(Action::delta().is_observation());
  CHECK(Action::output("rgl").is_observation());
  CHECK_FALSE(Action::input("on").is_observation());
}

TEST_CASE("traces reject the internal action") {
  CHECK_THROWS_AS(Trace({Action::tau()}), Error);
  Trace t;
  CHECK_THROWS_AS(t.append(Action::tau()), Error);
  t.append(Action::input("on"));
  t.append(Action::delta());
  CHECK(t.size() == 2);
  CHECK(t.back().is_delta());
}

TEST_CASE("trace slicing and containment") {
  const Trace t({Action::input("on"), Action::input("off"), Action::input("on")});
  CHECK(t.prefix(0).empty());
  CHECK(t.prefix(2) == Trace({Action::input("on"), Action::input("off")}));
  CHECK(t.suffix(1) == Trace({Action::input("off"), Action::input("on")}));
  CHECK(t.suffix(3).empty());

  CHECK(t.prefix(2).is_prefix_of(t));
  CHECK_FALSE(t.is_prefix_of(t.prefix(2)));
  CHECK(Trace().is_prefix_of(t));

  const Trace sub({Action::input("on"), Action::input("on")});
  CHECK(sub.is_subsequence_of(t));
  CHECK_FALSE(Trace({Action::input("off"), Action::input("off")}).is_subsequence_of(t));
  CHECK(t.is_subsequence_of(t));

  CHECK(t.extended(Action::output("rgl")).size() == 4);
  CHECK(t.size() == 3);  // extended copies
}

TEST_CASE("the shipped fixtures validate cleanly") {
  CHECK(validate(*fixtures::cruise()).empty());
  CHECK(validate(*fixtures::faulty()).empty());
}

TEST_CASE("validate flags each well-formedness clause") {
  Iofts m = *fixtures::cruise();

  SUBCASE("unknown initial state") {
    m.initial = "nowhere";
    CHECK(has_clause(validate(m), "initial"));
  }
  SUBCASE("overlapping alphabets") {
    m.outputs.push_back("on");
    CHECK(has_clause(validate(m), "alphabet"));
  }
  SUBCASE("reserved action names") {
    m.inputs.push_back("tau");
    m.outputs.push_back("delta");
    const auto ds = validate(m);
    CHECK(std::count_if(ds.begin(), ds.end(), [](const Diagnostic& d) {
            return d.clause == "alphabet";
          }) == 2);
  }
  SUBCASE("guard over undeclared feature") {
    m.transitions[0].guard = Formula::var("turbo");
    CHECK(has_clause(validate(m), "guards"));
  }
  SUBCASE("conflicting guards on the same edge") {
    Transition dup = m.transitions[0];
    dup.guard = Formula::var("cac");
    m.transitions.push_back(dup);
    CHECK(has_clause(validate(m), "guard-uniqueness"));
  }
  SUBCASE("duplicate edges with identical guards stay legal") {
    m.transitions.push_back(m.transitions[0]);
    CHECK(validate(m).empty());
  }
  SUBCASE("partial product assignment") {
    m.products[0].assignment.erase("cac");
    CHECK(has_clause(validate(m), "products"));
  }
  SUBCASE("product over undeclared feature") {
    m.products[0].assignment["turbo"] = true;
    CHECK(has_clause(validate(m), "products"));
  }
  SUBCASE("duplicate product names") {
    m.products.push_back(m.products[0]);
    CHECK(has_clause(validate(m), "products"));
  }
  SUBCASE("transition endpoint outside the state set") {
    m.transitions[0].dst = "s9";
    // states are explicit on Iofts; s9 was never declared
    CHECK(has_clause(validate(m), "transitions"));
  }
  SUBCASE("transition over undeclared action") {
    m.transitions[0].action = Action::input("warp");
    CHECK(has_clause(validate(m), "transitions"));
  }
  SUBCASE("delta edges cannot be declared, only synthesized") {
    m.transitions[0].action = Action::delta();
    CHECK(has_clause(validate(m), "transitions"));
  }
}

TEST_CASE("reach ignores guards and follows edges") {
  const Iofts& m = *fixtures::cruise();
  CHECK(reach(m, "s0") == std::set<std::string>{"s0", "s1", "s2"});
  // s2 --nor--> s1 --off--> s0: everything is mutually reachable here.
  CHECK(reach(m, "s2") == std::set<std::string>{"s0", "s1", "s2"});

  Iofts sink = m;
  sink.transitions.clear();
  CHECK(reach(sink, "s1") == std::set<std::string>{"s1"});
}

TEST_CASE("step relation absorbs tau moves") {
  const std::vector<Transition> edges{
      {"a", Action::tau(), Formula::constant(true), "b"},
      {"b", Action::input("go"), Formula::constant(true), "c"},
      {"c", Action::tau(), Formula::constant(true), "a"},
  };
  const StepRelation rel(edges);

  CHECK(rel.tau_closure({"a"}) == std::set<std::string>{"a", "b"});
  CHECK(rel.successors({"a", "b"}, Action::input("go")) ==
        std::set<std::string>{"a", "b", "c"});
  CHECK(rel.visible_actions() == std::vector<Action>{Action::input("go")});

  const Trace t({Action::input("go"), Action::input("go")});
  CHECK(rel.run({"a"}, t) == std::set<std::string>{"a", "b", "c"});
  CHECK(steps(rel, {"a"}, t) == std::set<std::string>{"a", "b", "c"});
  CHECK(steps(rel, {"a"}, Trace({Action::output("no")})).empty());
}

TEST_CASE("raw step relation keeps only product-satisfiable guards") {
  Iofts m = *fixtures::cruise();
  // No product has cac without cc, so a !cc & cac guard is dead.
  m.transitions[0].guard = fixtures::phi("!cc & cac", m);
  const StepRelation rel = raw_step_relation(m);
  CHECK(rel.successors({"s0"}, Action::input("on")).empty());

  const StepRelation live = raw_step_relation(*fixtures::cruise());
  CHECK(live.successors({"s0"}, Action::input("on")) == std::set<std::string>{"s1"});
}

TEST_CASE("straces_upto is prefix-closed and bounded") {
  const StepRelation rel = raw_step_relation(*fixtures::cruise());
  const auto traces = straces_upto(rel, {"s0"}, 2);
  CHECK(traces.contains(Trace()));
  CHECK(traces.contains(Trace({Action::input("on")})));
  CHECK(traces.contains(Trace({Action::input("on"), Action::output("rgl")})));
  CHECK_FALSE(traces.contains(Trace({Action::output("rgl")})));
  for (const Trace& t : traces) {
    CHECK(t.size() <= 2);
    if (!t.empty()) CHECK(traces.contains(t.prefix(t.size() - 1)));
  }
}
