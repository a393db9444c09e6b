#include <algorithm>

#include "doctest.h"
#include "fixtures.hh"
#include "ftskit/exec.hh"
#include "ftskit/harness.hh"
#include "ftskit/text.hh"

using namespace ftskit;

namespace {

FeatureSpec line_spec() {
  return project(fixtures::cruise(), fixtures::phi("cc", *fixtures::cruise()));
}

const ProductConfig& l1() { return fixtures::product(*fixtures::cruise(), "l1"); }

}  // namespace

TEST_CASE("generated models are a pure function of seed and parameters") {
  GenParams params;
  params.seed = 42;
  CHECK(print_model(random_iofts(params)) == print_model(random_iofts(params)));

  GenParams other = params;
  other.seed = 43;
  CHECK(print_model(random_iofts(params)) != print_model(random_iofts(other)));
}

TEST_CASE("generated models always validate and respect the requested ranges") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenParams params;
    params.seed = seed;
    const Iofts m = random_iofts(params);
    CHECK(validate(m).empty());
    CHECK(params.n_states.contains(static_cast<int>(m.states.size())));
    CHECK(params.n_features.contains(static_cast<int>(m.features.size())));
    CHECK(params.n_products.contains(static_cast<int>(m.products.size())));
    CHECK(params.n_inputs.contains(static_cast<int>(m.inputs.size())));
    CHECK(params.n_outputs.contains(static_cast<int>(m.outputs.size())));
    // The backbone guarantees every state is reachable when guards are ignored.
    CHECK(reach(m, m.initial).size() == m.states.size());
  }
}

TEST_CASE("a model without outputs or internal moves is quiescent everywhere") {
  GenParams params;
  params.seed = 7;
  params.n_states = {1, 1};
  params.n_outputs = {0, 0};
  params.p_tau = 0.0;
  const Iofts m = random_iofts(params);
  REQUIRE(m.states.size() == 1);
  for (const ProductConfig& lambda : m.products) {
    CHECK(quiescent(m, m.states[0], lambda));
  }
  const FeatureSpec spec = project(m, Formula::constant(true));
  CHECK(spec.has_delta_at(m.states[0]));
}

TEST_CASE("generator parameters are sanity-checked") {
  GenParams bad;
  bad.n_states = {3, 2};
  CHECK_THROWS_AS(random_iofts(bad), Error);

  GenParams worse;
  worse.p_guard = 1.5;
  CHECK_THROWS_AS(random_iofts(worse), Error);
}

TEST_CASE("mutate_impl is deterministic and yields a single-product implementation") {
  GenParams params;
  params.seed = 11;
  const FeatureSpec spec = project(random_iofts(params), Formula::constant(true));
  for (std::uint64_t seed : {0ull, 1ull, 2ull, 3ull, 5ull, 10ull}) {
    const FeatureSpec impl = mutate_impl(spec, seed);
    CHECK(print_model(impl.base()) == print_model(mutate_impl(spec, seed).base()));
    CHECK(impl.products().size() == 1);
    CHECK(validate(impl.base()).empty());
  }
}

TEST_CASE("the conforming mutation class passes the family suite") {
  for (std::uint64_t seed : {0ull, 4ull, 8ull}) {
    GenParams params;
    params.seed = seed + 100;
    const FeatureSpec spec = project(random_iofts(params), Formula::constant(true));
    const FeatureSpec impl = mutate_impl(spec, seed * 4);  // class 0: conforming
    CHECK(conforms(impl, spec, 3));
  }
}

TEST_CASE("failure transfer holds on the cruise family suite") {
  const TestSuite suite = build_suite(line_spec(), 5);
  const PropertyReport report = check_lemma_spine_fail(suite, l1(), 5);
  CHECK(report.ok());
  CHECK(report.cases_run > 0);
  CHECK(report.cases_applicable > 0);

  // A tighter path bound never enlarges the enumeration.
  const PropertyReport shorter = check_lemma_spine_fail(suite, l1(), 2);
  CHECK(shorter.ok());
  CHECK(shorter.cases_run <= report.cases_run);
}

TEST_CASE("failure transfer is vacuous when nothing is new for the product") {
  // Projected onto l1's own formula, every guard is l1-satisfied.
  const FeatureSpec solo =
      project(fixtures::cruise(), fixtures::phi("cc & !cac", *fixtures::cruise()));
  const PropertyReport report = check_lemma_spine_fail(build_suite(solo, 4), l1(), 4);
  CHECK(report.ok());
  CHECK(report.cases_run > 0);
  CHECK(report.cases_applicable == 0);
}

TEST_CASE("failure transfer rejects foreign products") {
  ProductConfig unsat{"unsat", {{"cc", false}, {"cac", false}}};
  CHECK_THROWS_AS(check_lemma_spine_fail(build_suite(line_spec(), 2), unsat, 2), Error);
}

TEST_CASE("the incremental guarantee holds for a full product implementation") {
  const FeatureSpec impl =
      derive_product(*fixtures::cruise(), fixtures::product(*fixtures::cruise(), "l2"));
  const PropertyReport report = check_theorem_incremental(line_spec(), l1(), impl, 5);
  CHECK(report.ok());
  CHECK(report.cases_applicable == 1);
  REQUIRE(!report.notes.empty());
  CHECK(report.notes[0] ==
        "orthogonal=yes passes-product-suite=yes passes-spinal-suite=yes");
}

TEST_CASE("the incremental guarantee is inapplicable to non-orthogonal implementations") {
  const FeatureSpec impl = project(fixtures::faulty(), Formula::constant(true));
  const PropertyReport report = check_theorem_incremental(line_spec(), l1(), impl, 5);
  CHECK(report.ok());  // premises failed; nothing to assert
  CHECK(report.cases_applicable == 0);
  REQUIRE(!report.notes.empty());
  CHECK(report.notes[0] ==
        "orthogonal=no passes-product-suite=yes passes-spinal-suite=yes");
}

TEST_CASE("an identity implementation satisfies premises and conclusion") {
  const FeatureSpec impl =
      derive_product(*fixtures::cruise(), fixtures::product(*fixtures::cruise(), "l1"));
  const PropertyReport report = check_theorem_incremental(line_spec(), l1(), impl, 4);
  CHECK(report.ok());
  CHECK(report.cases_applicable == 1);
}

TEST_CASE("product conformance checks every product against the projection") {
  const Iofts& m = *fixtures::cruise();

  const PropertyReport family = check_product_conformance(m, fixtures::phi("cc", m), 4);
  CHECK(family.ok());
  CHECK(family.cases_run == 2);
  CHECK(family.cases_applicable == 2);

  const PropertyReport narrowed =
      check_product_conformance(m, fixtures::phi("cc & !cac", m), 4);
  CHECK(narrowed.ok());
  CHECK(narrowed.cases_run == 2);
  CHECK(narrowed.cases_applicable == 1);
  REQUIRE(narrowed.notes.size() == 1);
  CHECK(narrowed.notes[0].find("l2") != std::string::npos);

  const PropertyReport single =
      check_product_conformance(*fixtures::faulty(), Formula::constant(true), 4);
  CHECK(single.ok());
  CHECK(single.cases_applicable == 1);
}
