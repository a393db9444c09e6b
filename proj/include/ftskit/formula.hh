#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ftskit {

/// Base error type for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using FeatureId = std::string;

/// One concrete product: a total truth assignment over a model's features.
/// The name is metadata; two configurations are the same product iff their
/// assignments coincide.
struct ProductConfig {
  std::string name;
  std::map<FeatureId, bool> assignment;

  /// Truth value of a feature; throws Error when the feature is unbound.
  bool value_of(const FeatureId& feature) const;

  bool same_assignment(const ProductConfig& other) const {
    return assignment == other.assignment;
  }
};

/// Immutable propositional formula over feature identifiers.
///
/// Nodes are shared and never mutated, so copies are cheap. Equality is
/// structural. Printing uses minimal parentheses with precedence
/// ! > & > | and left-associative binary operators, so that
/// parse_formula(f.to_string()) reproduces f exactly.
class Formula {
 public:
  enum class Kind { Const, Var, Not, And, Or };

  /// Defaults to the constant true.
  Formula();

  static Formula constant(bool value);
  static Formula var(FeatureId name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  Kind kind() const;
  bool const_value() const;          // Const only
  const FeatureId& var_name() const; // Var only
  Formula operand() const;           // Not only
  Formula lhs() const;               // And/Or only
  Formula rhs() const;               // And/Or only

  /// Evaluates under a total assignment; throws Error on an unbound feature.
  bool evaluate(const ProductConfig& lambda) const;

  /// All feature identifiers occurring in the formula.
  std::set<FeatureId> variables() const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Structural equality; identical to operator== and provided for call sites
/// that want the intent spelled out.
bool syntactically_equal(const Formula& a, const Formula& b);

/// Parses `formula := or ; or := and ('|' and)* ; and := unary ('&' unary)* ;
/// unary := '!' unary | atom ; atom := 'true' | 'false' | ident | '(' formula ')'`.
/// Identifiers must be declared in `features`; violations and syntax errors
/// throw Error with a character position.
Formula parse_formula(std::string_view text, const std::vector<FeatureId>& features);

/// The subset of `products` satisfying f, in declaration order.
std::vector<ProductConfig> sat_in(const Formula& f,
                                  const std::vector<ProductConfig>& products);

/// Characteristic formula of a configuration: the conjunction of f / !f over
/// `features` in declaration order. Exactly lambda satisfies it.
Formula config_formula(const ProductConfig& lambda,
                       const std::vector<FeatureId>& features);

/// True when a and b evaluate identically under every configuration in Λ.
bool equivalent_over(const Formula& a, const Formula& b,
                     const std::vector<ProductConfig>& products);

}  // namespace ftskit
