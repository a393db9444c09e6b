#include "ftskit/formula.hh"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ftskit {

bool ProductConfig::value_of(const FeatureId& feature) const {
  auto it = assignment.find(feature);
  if (it == assignment.end())
    throw Error("product '" + name + "' does not assign feature '" + feature + "'");
  return it->second;
}

struct Formula::Node {
  Kind kind;
  bool value = false;   // Const
  FeatureId var;        // Var
  std::shared_ptr<const Node> lhs, rhs;  // Not uses lhs only
};

Formula::Formula() : Formula(constant(true)) {}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  return Formula(std::move(n));
}

Formula Formula::var(FeatureId name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(name);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula operand) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = std::move(operand.node_);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::const_value() const {
  if (kind() != Kind::Const) throw Error("const_value on non-constant formula");
  return node_->value;
}

const FeatureId& Formula::var_name() const {
  if (kind() != Kind::Var) throw Error("var_name on non-variable formula");
  return node_->var;
}

Formula Formula::operand() const {
  if (kind() != Kind::Not) throw Error("operand on non-negation formula");
  return Formula(node_->lhs);
}

Formula Formula::lhs() const {
  if (kind() != Kind::And && kind() != Kind::Or)
    throw Error("lhs on non-binary formula");
  return Formula(node_->lhs);
}

Formula Formula::rhs() const {
  if (kind() != Kind::And && kind() != Kind::Or)
    throw Error("rhs on non-binary formula");
  return Formula(node_->rhs);
}

bool Formula::evaluate(const ProductConfig& lambda) const {
  switch (kind()) {
    case Kind::Const: return node_->value;
    case Kind::Var: {
      auto it = lambda.assignment.find(node_->var);
      if (it == lambda.assignment.end())
        throw Error("unbound feature '" + node_->var + "' while evaluating formula");
      return it->second;
    }
    case Kind::Not: return !Formula(node_->lhs).evaluate(lambda);
    case Kind::And:
      return Formula(node_->lhs).evaluate(lambda) && Formula(node_->rhs).evaluate(lambda);
    case Kind::Or:
      return Formula(node_->lhs).evaluate(lambda) || Formula(node_->rhs).evaluate(lambda);
  }
  throw Error("corrupt formula node");
}

static void collect_vars(const Formula& f, std::set<FeatureId>& out) {
  switch (f.kind()) {
    case Formula::Kind::Const: return;
    case Formula::Kind::Var: out.insert(f.var_name()); return;
    case Formula::Kind::Not: collect_vars(f.operand(), out); return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      return;
  }
}

std::set<FeatureId> Formula::variables() const {
  std::set<FeatureId> out;
  collect_vars(*this, out);
  return out;
}

namespace {

// Precedence levels used by the printer: | = 1, & = 2, ! = 3, atoms = 4.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Not: return 3;
    default: return 4;
  }
}

// `min_prec` is the weakest precedence printable here without parentheses.
// Binary operators are left-associative, so the right child requires strictly
// higher precedence; this keeps a & (b & c) distinguishable from a & b & c.
void print(const Formula& f, int min_prec, std::ostream& os) {
  int prec = precedence(f.kind());
  bool parens = prec < min_prec;
  if (parens) os << '(';
  switch (f.kind()) {
    case Formula::Kind::Const: os << (f.const_value() ? "true" : "false"); break;
    case Formula::Kind::Var: os << f.var_name(); break;
    case Formula::Kind::Not:
      os << '!';
      print(f.operand(), prec, os);
      break;
    case Formula::Kind::And:
      print(f.lhs(), prec, os);
      os << " & ";
      print(f.rhs(), prec + 1, os);
      break;
    case Formula::Kind::Or:
      print(f.lhs(), prec, os);
      os << " | ";
      print(f.rhs(), prec + 1, os);
      break;
  }
  if (parens) os << ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::ostringstream os;
  print(*this, 0, os);
  return os.str();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Const: return a.const_value() == b.const_value();
    case Formula::Kind::Var: return a.var_name() == b.var_name();
    case Formula::Kind::Not: return a.operand() == b.operand();
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

bool syntactically_equal(const Formula& a, const Formula& b) { return a == b; }

namespace {

struct Token {
  enum Type { Ident, True, False, Bang, Amp, Pipe, LParen, RParen, End } type;
  std::string text;
  std::size_t pos;  // 0-based character offset
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Token::End, "", start};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '!': current_ = {Token::Bang, "!", start}; ++pos_; return;
      case '&': current_ = {Token::Amp, "&", start}; ++pos_; return;
      case '|': current_ = {Token::Pipe, "|", start}; ++pos_; return;
      case '(': current_ = {Token::LParen, "(", start}; ++pos_; return;
      case ')': current_ = {Token::RParen, ")", start}; ++pos_; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "true") current_ = {Token::True, word, start};
      else if (word == "false") current_ = {Token::False, word, start};
      else current_ = {Token::Ident, word, start};
      return;
    }
    throw Error("syntax error at offset " + std::to_string(start) +
                ": unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(std::string_view text, const std::vector<FeatureId>& features)
      : lex_(text), features_(features) {}

  Formula parse() {
    Formula f = parse_or();
    const Token& t = lex_.peek();
    if (t.type != Token::End)
      throw Error("syntax error at offset " + std::to_string(t.pos) +
                  ": unexpected '" + t.text + "'");
    return f;
  }

 private:
  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().type == Token::Pipe) {
      lex_.take();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().type == Token::Amp) {
      lex_.take();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (lex_.peek().type == Token::Bang) {
      lex_.take();
      return Formula::negation(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    Token t = lex_.take();
    switch (t.type) {
      case Token::True: return Formula::constant(true);
      case Token::False: return Formula::constant(false);
      case Token::Ident: {
        if (std::find(features_.begin(), features_.end(), t.text) == features_.end())
          throw Error("undeclared feature '" + t.text + "' at offset " +
                      std::to_string(t.pos));
        return Formula::var(t.text);
      }
      case Token::LParen: {
        Formula f = parse_or();
        Token close = lex_.take();
        if (close.type != Token::RParen)
          throw Error(close.type == Token::End
                          ? "syntax error at end of input: expected ')'"
                          : "syntax error at offset " + std::to_string(close.pos) +
                                ": expected ')'");
        return f;
      }
      case Token::End:
        throw Error("syntax error at end of input");
      default:
        throw Error("syntax error at offset " + std::to_string(t.pos) +
                    ": unexpected '" + t.text + "'");
    }
  }

  Lexer lex_;
  const std::vector<FeatureId>& features_;
};

}  // namespace

Formula parse_formula(std::string_view text, const std::vector<FeatureId>& features) {
  return Parser(text, features).parse();
}

std::vector<ProductConfig> sat_in(const Formula& f,
                                  const std::vector<ProductConfig>& products) {
  std::vector<ProductConfig> out;
  for (const ProductConfig& lambda : products)
    if (f.evaluate(lambda)) out.push_back(lambda);
  return out;
}

Formula config_formula(const ProductConfig& lambda,
                       const std::vector<FeatureId>& features) {
  Formula acc = Formula::constant(true);
  bool first = true;
  for (const FeatureId& feature : features) {
    bool value = lambda.value_of(feature);  // throws when not total
    Formula lit = value ? Formula::var(feature)
                        : Formula::negation(Formula::var(feature));
    if (first) {
      acc = std::move(lit);
      first = false;
    } else {
      acc = Formula::conjunction(std::move(acc), std::move(lit));
    }
  }
  return acc;
}

bool equivalent_over(const Formula& a, const Formula& b,
                     const std::vector<ProductConfig>& products) {
  for (const ProductConfig& lambda : products)
    if (a.evaluate(lambda) != b.evaluate(lambda)) return false;
  return true;
}

}  // namespace ftskit
