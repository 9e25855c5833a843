#include "colat/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "colat/error.hpp"

namespace colat {

struct Term::Node {
  Kind kind = Kind::variable;
  std::string name;
  std::vector<Term> children;
};

namespace {

const std::string kNoName;
const std::vector<Term> kNoChildren;

bool identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

}  // namespace

Term Term::variable(std::string name) {
  if (name.empty() || !std::all_of(name.begin(), name.end(), identifier_char))
    throw InputError("invalid variable name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->kind = Kind::variable;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::join(std::vector<Term> children) {
  if (children.size() < 2) throw InputError("a join needs at least two operands");
  auto node = std::make_shared<Node>();
  node->kind = Kind::join;
  node->children = std::move(children);
  return Term(std::move(node));
}

Term Term::meet(std::vector<Term> children) {
  if (children.size() < 2) throw InputError("a meet needs at least two operands");
  auto node = std::make_shared<Node>();
  node->kind = Kind::meet;
  node->children = std::move(children);
  return Term(std::move(node));
}

Term::Kind Term::kind() const noexcept { return node_ ? node_->kind : Kind::variable; }

const std::string& Term::name() const noexcept { return node_ ? node_->name : kNoName; }

const std::vector<Term>& Term::children() const noexcept {
  return node_ ? node_->children : kNoChildren;
}

std::string Term::to_string() const {
  if (!node_) return "";
  if (node_->kind == Kind::variable) return node_->name;
  std::string out = node_->kind == Kind::join ? "(v" : "(^";
  for (const Term& child : node_->children) {
    out += ' ';
    out += child.to_string();
  }
  out += ')';
  return out;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.kind() == b.kind() && a.name() == b.name() && a.children() == b.children();
}

namespace {

Term combine(Term::Kind kind, const Term& a, const Term& b) {
  std::vector<Term> children;
  for (const Term* t : {&a, &b}) {
    if (t->kind() == kind && !t->children().empty())
      children.insert(children.end(), t->children().begin(), t->children().end());
    else
      children.push_back(*t);
  }
  return kind == Term::Kind::join ? Term::join(std::move(children))
                                  : Term::meet(std::move(children));
}

}  // namespace

Term operator|(const Term& a, const Term& b) { return combine(Term::Kind::join, a, b); }
Term operator&(const Term& a, const Term& b) { return combine(Term::Kind::meet, a, b); }

Term join_all(const std::vector<Term>& terms) {
  if (terms.empty()) throw InputError("empty join");
  if (terms.size() == 1) return terms.front();
  return Term::join(terms);
}

Term meet_all(const std::vector<Term>& terms) {
  if (terms.empty()) throw InputError("empty meet");
  if (terms.size() == 1) return terms.front();
  return Term::meet(terms);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term term() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (text_[pos_] == '(') {
      const std::size_t open = pos_++;
      skip_space();
      Term::Kind kind;
      if (consume("v"))
        kind = Term::Kind::join;
      else if (consume("^"))
        kind = Term::Kind::meet;
      else
        throw ParseError("expected 'v' or '^' after '('", pos_);
      std::vector<Term> children;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", open);
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        children.push_back(term());
      }
      if (children.size() < 2)
        throw ParseError(std::string(kind == Term::Kind::join ? "join" : "meet") +
                             " needs at least two operands",
                         open);
      return kind == Term::Kind::join ? Term::join(std::move(children))
                                      : Term::meet(std::move(children));
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && identifier_char(text_[pos_])) ++pos_;
    if (pos_ == start)
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return Term::variable(std::string(text_.substr(start, pos_ - start)));
  }

  // Parses "(= t u)" or "(<= t u)"; returns the relation.
  Relation relation_head() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '(')
      throw ParseError("expected '(' starting an identity", pos_);
    ++pos_;
    skip_space();
    if (consume("<=")) return Relation::below;
    if (consume("=")) return Relation::equals;
    throw ParseError("expected '=' or '<='", pos_);
  }

  void close() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
    ++pos_;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Operator tokens must be followed by a delimiter.
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    const std::size_t end = pos_ + token.size();
    if (end < text_.size() && identifier_char(text_[end]) && identifier_char(token.back()))
      return false;
    pos_ = end;
    return true;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_variables(const Term& term, std::vector<std::string>& out,
                       std::set<std::string>& seen) {
  if (term.kind() == Term::Kind::variable) {
    if (seen.insert(term.name()).second) out.push_back(term.name());
    return;
  }
  for (const Term& child : term.children()) collect_variables(child, out, seen);
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser parser(text);
  Term result = parser.term();
  parser.finish();
  return result;
}

std::vector<std::string> term_variables(const Term& term) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_variables(term, out, seen);
  return out;
}

std::size_t term_size(const Term& term) {
  std::size_t size = 1;
  for (const Term& child : term.children()) size += term_size(child);
  return size;
}

std::string Identity::to_string() const {
  return std::string(relation == Relation::equals ? "(= " : "(<= ") + lhs.to_string() + " " +
         rhs.to_string() + ")";
}

Identity make_identity(std::string name, std::vector<std::string> variables,
                       Relation relation, Term lhs, Term rhs, bool rhs_below_lhs) {
  if (lhs.empty() || rhs.empty()) throw InputError("identity sides must be nonempty");
  std::set<std::string> declared;
  for (const auto& v : variables)
    if (!declared.insert(v).second) throw InputError("variable '" + v + "' declared twice");
  for (const Term* side : {&lhs, &rhs})
    for (const auto& v : term_variables(*side))
      if (!declared.count(v)) throw InputError("variable '" + v + "' is not declared");
  return Identity{std::move(name), std::move(variables), relation,
                  std::move(lhs),  std::move(rhs),       rhs_below_lhs};
}

Identity parse_identity(std::string_view text, std::string name,
                        std::vector<std::string> variables) {
  Parser parser(text);
  const Relation relation = parser.relation_head();
  Term lhs = parser.term();
  Term rhs = parser.term();
  parser.close();
  parser.finish();
  if (variables.empty()) {
    variables = term_variables(lhs);
    for (const auto& v : term_variables(rhs))
      if (std::find(variables.begin(), variables.end(), v) == variables.end())
        variables.push_back(v);
  }
  return make_identity(std::move(name), std::move(variables), relation, std::move(lhs),
                       std::move(rhs));
}

Elem evaluate(const FinLattice& lattice, const Term& term,
              const std::vector<std::string>& variables, std::span<const Elem> values) {
  switch (term.kind()) {
    case Term::Kind::variable: {
      auto it = std::find(variables.begin(), variables.end(), term.name());
      if (it == variables.end())
        throw InputError("variable '" + term.name() + "' has no value");
      return values[static_cast<std::size_t>(it - variables.begin())];
    }
    case Term::Kind::join: {
      Elem value = lattice.bottom();
      for (const Term& child : term.children())
        value = lattice.join(value, evaluate(lattice, child, variables, values));
      return value;
    }
    case Term::Kind::meet: {
      Elem value = lattice.top();
      for (const Term& child : term.children())
        value = lattice.meet(value, evaluate(lattice, child, variables, values));
      return value;
    }
  }
  return lattice.bottom();
}

}  // namespace colat
