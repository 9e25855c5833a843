#include <doctest.h>

#include "colat/builtin.hpp"
#include "colat/catalog.hpp"
#include "colat/error.hpp"
#include "colat/term.hpp"

using namespace colat;

TEST_SUITE("term") {
  TEST_CASE("parse a meet of a join") {
    const Term t = parse_term("(^ x (v a b))");
    CHECK(t.kind() == Term::Kind::meet);
    REQUIRE(t.children().size() == 2);
    CHECK(t.children()[0] == Term::variable("x"));
    CHECK(t.children()[1] == Term::join({Term::variable("a"), Term::variable("b")}));
    CHECK(t.to_string() == "(^ x (v a b))");
    CHECK(term_variables(t) == std::vector<std::string>{"x", "a", "b"});
    CHECK(term_size(t) == 5);
  }

  TEST_CASE("whitespace is insignificant") {
    CHECK(parse_term("  ( v\n x\t y )  ") == parse_term("(v x y)"));
  }

  TEST_CASE("arity and syntax errors carry positions") {
    CHECK_THROWS_AS(parse_term("(v x)"), ParseError);
    CHECK_THROWS_AS(Term::meet({Term::variable("x")}), InputError);
    try {
      (void)parse_term("(v x y");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 0);
    }
    try {
      (void)parse_term("(v x y) z");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 8);
    }
    CHECK_THROWS_AS(parse_term("(+ x y)"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term(")"), ParseError);
  }

  TEST_CASE("builtins round-trip through text") {
    for (const std::string& name : builtin_names()) {
      CAPTURE(name);
      const Identity id = builtin_identity(name);
      const Identity back = parse_identity(id.to_string(), id.name, id.variables);
      CHECK(back.lhs == id.lhs);
      CHECK(back.rhs == id.rhs);
      CHECK(back.relation == id.relation);
      CHECK(parse_term(id.lhs.to_string()) == id.lhs);
    }
    CHECK_THROWS_AS(builtin_identity("U"), InputError);
  }

  TEST_CASE("builtin variable lists") {
    CHECK(builtin_identity("E").variables ==
          std::vector<std::string>{"x", "a", "b0", "b1", "b2"});
    CHECK(builtin_identity("P").variables.size() == 6);
    auto star = builtin_identity("STAR").variables;
    std::sort(star.begin(), star.end());
    CHECK(star == std::vector<std::string>{"x0", "x1", "x2", "x3", "xa", "xb"});
    CHECK(builtin_identity("STAR").relation == Relation::below);
  }

  TEST_CASE("identity parsing") {
    const Identity id = parse_identity("(<= (^ x y) x)");
    CHECK(id.relation == Relation::below);
    CHECK(id.variables == std::vector<std::string>{"x", "y"});
    CHECK(parse_identity("(= x x)").relation == Relation::equals);
    CHECK_THROWS_AS(parse_identity("(= x y)", "", {"x"}), InputError);
    CHECK_THROWS_AS(parse_identity("(= x y)", "", {"x", "y", "x"}), InputError);
    CHECK_THROWS_AS(parse_identity("(< x y)"), ParseError);
  }

  TEST_CASE("evaluation") {
    const FinLattice m3 = diamond_m3();
    const Elem a = *m3.find("a"), b = *m3.find("b"), c = *m3.find("c");
    const Term t = parse_term("(^ a (v b c))");
    const std::vector<std::string> vars{"a", "b", "c"};
    const std::vector<Elem> values{a, b, c};
    CHECK(evaluate(m3, t, vars, values) == a);
    const Term u = parse_term("(v (^ a b) (^ a c))");
    CHECK(evaluate(m3, u, vars, values) == m3.bottom());
  }

  TEST_CASE("operators flatten same-kind operands") {
    const Term x = Term::variable("x"), y = Term::variable("y"), z = Term::variable("z");
    CHECK((x | y | z).children().size() == 3);
    CHECK(((x | y) & z).children().size() == 2);
    CHECK(join_all({x}) == x);
    CHECK(meet_all({x, y}) == (x & y));
  }

  TEST_CASE("STAR intermediate terms") {
    const StarTerms s = star_terms();
    CHECK(s.x1_0 == Term::variable("x1"));
    CHECK(s.x2_0 == Term::variable("x2"));
    CHECK(s.t.kind() == Term::Kind::join);
    CHECK(s.t.children().size() == 6);
    CHECK(star_iterates(0).first == s.x1_0);
    CHECK(star_iterates(1).first == s.x1_1);
    CHECK(star_iterates(2).first == s.x1_2);
    CHECK(builtin_identity("STAR").lhs == s.x1_2);
    CHECK(builtin_identity("STAR").rhs == (s.s | s.t));
  }
}
