#include <vector>

#include "doctest.h"
#include "ftskit/formula.hh"

using namespace ftskit;

namespace {

const std::vector<FeatureId> kFeatures{"cc", "cac"};

ProductConfig config(std::string name, bool cc, bool cac) {
  return ProductConfig{std::move(name), {{"cc", cc}, {"cac", cac}}};
}

}  // namespace

TEST_CASE("formula construction and printing use minimal parentheses") {
  const Formula cc = Formula::var("cc");
  const Formula cac = Formula::var("cac");

  CHECK(Formula::constant(true).to_string() == "true");
  CHECK(Formula::constant(false).to_string() == "false");
  CHECK(Formula::negation(cc).to_string() == "!cc");
  CHECK(Formula::conjunction(cc, Formula::negation(cac)).to_string() == "cc & !cac");
  CHECK(Formula::disjunction(cc, cac).to_string() == "cc | cac");

  // A disjunction below a conjunction needs parentheses; a conjunction below
  // a disjunction does not.
  CHECK(Formula::conjunction(cc, Formula::disjunction(cc, cac)).to_string() ==
        "cc & (cc | cac)");
  CHECK(Formula::disjunction(Formula::conjunction(cc, cac), cc).to_string() ==
        "cc & cac | cc");
  // Right-nested same-operator trees keep their shape visible.
  CHECK(Formula::conjunction(cc, Formula::conjunction(cac, cc)).to_string() ==
        "cc & (cac & cc)");
  CHECK(Formula::negation(Formula::disjunction(cc, cac)).to_string() == "!(cc | cac)");
}

TEST_CASE("formula default-constructs to true") {
  const Formula f;
  CHECK(f.kind() == Formula::Kind::Const);
  CHECK(f.const_value());
}

TEST_CASE("parse_formula honors precedence and associativity") {
  const Formula f = parse_formula("cc | cac & !cc", kFeatures);
  REQUIRE(f.kind() == Formula::Kind::Or);
  CHECK(f.lhs().kind() == Formula::Kind::Var);
  CHECK(f.rhs().kind() == Formula::Kind::And);
  CHECK(f.rhs().rhs().kind() == Formula::Kind::Not);

  const Formula left = parse_formula("cc & cac & cc", kFeatures);
  REQUIRE(left.kind() == Formula::Kind::And);
  CHECK(left.lhs().kind() == Formula::Kind::And);  // left-associative

  CHECK(parse_formula("!(cc | cac)", kFeatures).kind() == Formula::Kind::Not);
  CHECK(parse_formula("true", kFeatures).const_value());
  CHECK_FALSE(parse_formula("false", kFeatures).const_value());
}

TEST_CASE("parsing and printing round-trip structurally") {
  for (const char* text : {"cc", "!cc", "cc & !cac", "cc & (cc | cac)", "cc & cac | cc",
                           "true", "!(cc & cac)", "cc & !cac & cc"}) {
    const Formula f = parse_formula(text, kFeatures);
    CHECK(parse_formula(f.to_string(), kFeatures) == f);
    CHECK(f.to_string() == text);
  }
}

TEST_CASE("parse_formula reports positions and undeclared features") {
  CHECK_THROWS_WITH_AS(parse_formula("zz", kFeatures),
                       "undeclared feature 'zz' at offset 0", Error);
  CHECK_THROWS_AS(parse_formula("cc &", kFeatures), Error);
  CHECK_THROWS_WITH_AS(parse_formula("cc @ cac", kFeatures),
                       "syntax error at offset 3: unexpected character '@'", Error);
  CHECK_THROWS_AS(parse_formula("(cc", kFeatures), Error);
  CHECK_THROWS_AS(parse_formula("cc cac", kFeatures), Error);
  CHECK_THROWS_AS(parse_formula("", kFeatures), Error);
}

TEST_CASE("evaluate requires a total assignment") {
  const Formula f = parse_formula("cc & !cac", kFeatures);
  CHECK(f.evaluate(config("l1", true, false)));
  CHECK_FALSE(f.evaluate(config("l2", true, true)));

  const ProductConfig partial{"partial", {{"cc", true}}};
  CHECK_THROWS_AS(f.evaluate(partial), Error);
}

TEST_CASE("variables collects mentioned features only") {
  CHECK(parse_formula("cc & !cac | cc", kFeatures).variables() ==
        std::set<FeatureId>{"cc", "cac"});
  CHECK(Formula::constant(true).variables().empty());
}

TEST_CASE("sat_in keeps declaration order of products") {
  const std::vector<ProductConfig> products{config("l1", true, false),
                                            config("l2", true, true)};
  const auto both = sat_in(parse_formula("cc", kFeatures), products);
  REQUIRE(both.size() == 2);
  CHECK(both[0].name == "l1");
  CHECK(both[1].name == "l2");

  const auto only_l1 = sat_in(parse_formula("cc & !cac", kFeatures), products);
  REQUIRE(only_l1.size() == 1);
  CHECK(only_l1[0].name == "l1");

  CHECK(sat_in(Formula::constant(false), products).empty());
}

TEST_CASE("config_formula characterizes exactly one product") {
  const std::vector<ProductConfig> products{config("l1", true, false),
                                            config("l2", true, true)};
  const Formula chi = config_formula(products[0], kFeatures);
  CHECK(chi.to_string() == "cc & !cac");
  CHECK(chi.evaluate(products[0]));
  CHECK_FALSE(chi.evaluate(products[1]));

  // No features: the characteristic formula collapses to true.
  const Formula empty = config_formula(ProductConfig{"only", {}}, {});
  CHECK(empty.kind() == Formula::Kind::Const);
  CHECK(empty.const_value());
}

TEST_CASE("equivalent_over compares semantically over the given products") {
  const std::vector<ProductConfig> products{config("l1", true, false),
                                            config("l2", true, true)};
  const Formula redundant = parse_formula("cc & !cac & (cc & !cac)", kFeatures);
  CHECK(equivalent_over(redundant, parse_formula("cc & !cac", kFeatures), products));
  CHECK_FALSE(equivalent_over(redundant, parse_formula("cc", kFeatures), products));
  // Over an empty product set everything is vacuously equivalent.
  CHECK(equivalent_over(parse_formula("cc", kFeatures), Formula::constant(false), {}));
}

TEST_CASE("structural equality ignores nothing") {
  CHECK(parse_formula("cc & cac", kFeatures) ==
        Formula::conjunction(Formula::var("cc"), Formula::var("cac")));
  CHECK(parse_formula("cc & cac", kFeatures) != parse_formula("cac & cc", kFeatures));
  CHECK(syntactically_equal(parse_formula("!cc", kFeatures),
                            Formula::negation(Formula::var("cc"))));
}
