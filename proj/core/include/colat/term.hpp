#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

/// Immutable lattice term; subterms are shared between copies.
class Term {
 public:
  enum class Kind { variable, join, meet };

  /// Empty placeholder; only assignment and comparison are meaningful.
  Term() = default;
  bool empty() const noexcept { return node_ == nullptr; }

  static Term variable(std::string name);
  /// Throws InputError for fewer than two children.
  static Term join(std::vector<Term> children);
  static Term meet(std::vector<Term> children);

  Kind kind() const noexcept;
  /// Variable name; empty for operators.
  const std::string& name() const noexcept;
  const std::vector<Term>& children() const noexcept;

  /// S-expression: identifiers for variables, "(v t1 t2 ...)" for joins and
  /// "(^ t1 t2 ...)" for meets.
  std::string to_string() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Binary join/meet that merge with same-kind operands: (a v b) | c is
/// (v a b c).
Term operator|(const Term& a, const Term& b);
Term operator&(const Term& a, const Term& b);

/// Joins/meets of a list; a single-element list yields that element.
Term join_all(const std::vector<Term>& terms);
Term meet_all(const std::vector<Term>& terms);

/// Throws ParseError (with offset) on malformed input.
Term parse_term(std::string_view text);

/// Distinct variable names in order of first occurrence.
std::vector<std::string> term_variables(const Term& term);

/// Number of nodes in the tree (shared subterms counted per occurrence).
std::size_t term_size(const Term& term);

enum class Relation { equals, below };

struct Identity {
  std::string name;
  /// Declared variable order; also the iteration and witness order.
  std::vector<std::string> variables;
  Relation relation = Relation::equals;
  Term lhs;
  Term rhs;
  /// rhs <= lhs holds in every lattice, so an equation only needs lhs <= rhs.
  bool rhs_below_lhs = false;

  /// "(= lhs rhs)" or "(<= lhs rhs)".
  std::string to_string() const;
};

/// Validates that variables are distinct and cover every variable used.
Identity make_identity(std::string name, std::vector<std::string> variables,
                       Relation relation, Term lhs, Term rhs, bool rhs_below_lhs = false);

/// Parses "(= t u)" or "(<= t u)". Variables are taken from `variables` if
/// given, else in order of first occurrence.
Identity parse_identity(std::string_view text, std::string name = "",
                        std::vector<std::string> variables = {});

/// Direct recursive evaluation; `values[i]` is the value of variables[i].
Elem evaluate(const FinLattice& lattice, const Term& term,
              const std::vector<std::string>& variables, std::span<const Elem> values);

}  // namespace colat
