#include "colat/builtin.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "colat/error.hpp"

namespace colat {

namespace {

Term var(const char* name) { return Term::variable(name); }

Identity identity_e() {
  const Term x = var("x"), a = var("a");
  const std::array<Term, 3> b{var("b0"), var("b1"), var("b2")};
  const Term lhs = x & (a | b[0]) & (a | b[1]) & (a | b[2]);

  std::vector<Term> joinands;
  for (int i = 0; i < 3; ++i) {
    Term term = x & b[i];
    for (int j = 0; j < 3; ++j)
      if (j != i) term = term & (a | b[j]);
    joinands.push_back(term);
  }
  // sigma runs over all permutations of {0, 1, 2} in lexicographic order.
  std::array<int, 3> sigma{0, 1, 2};
  do {
    const Term& s0 = b[sigma[0]];
    const Term& s1 = b[sigma[1]];
    const Term& s2 = b[sigma[2]];
    const Term star0 = s0 & (x | s1);
    const Term star1 = s1 & (x | s2) & (s0 | s2);
    joinands.push_back(x & (a | star0) & (a | star1) & (a | s2));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  return make_identity("E", {"x", "a", "b0", "b1", "b2"}, Relation::equals, lhs,
                       join_all(joinands), true);
}

Identity identity_p() {
  const Term a = var("a"), b = var("b"), c = var("c"), d = var("d");
  const std::array<Term, 2> bi{var("b0"), var("b1")};
  const Term bp = b & (bi[0] | bi[1]);

  const Term lhs = a & (bp | c) & (c | d);
  std::vector<Term> joinands{
      a & bp & (c | d),
      a & d & (bp | c),
      a & ((bp & (a | d)) | c) & (c | d),
  };
  for (int i = 0; i < 2; ++i)
    joinands.push_back(a & (bi[i] | c) & ((bp & (a | bi[i]) & (bi[i] | d)) | c) & (c | d));
  return make_identity("P", {"a", "b", "c", "d", "b0", "b1"}, Relation::equals, lhs,
                       join_all(joinands), true);
}

Identity identity_hs() {
  const Term a = var("a"), b = var("b"), c = var("c");
  const std::array<Term, 2> bi{var("b0"), var("b1")};
  const Term bp = b & (bi[0] | bi[1]);

  const Term lhs = a & (bp | c);
  std::vector<Term> joinands{a & bp};
  for (int i = 0; i < 2; ++i) joinands.push_back(a & ((b & bi[i]) | c));
  for (int i = 0; i < 2; ++i)
    joinands.push_back(a & ((bp & (a | bi[i])) | c) & (bi[i] | c) & (b | bi[1 - i]));
  for (int i = 0; i < 2; ++i)
    joinands.push_back(a & ((bp & (a | bi[i])) | c) & (bi[0] | c) & (bi[1] | c));
  return make_identity("HS", {"a", "b", "c", "b0", "b1"}, Relation::equals, lhs,
                       join_all(joinands), true);
}

Identity identity_d2dual() {
  const Term x = var("x");
  const std::array<Term, 3> y{var("y0"), var("y1"), var("y2")};
  const Term lhs = x & (y[0] | y[1] | y[2]);
  std::vector<Term> joinands;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) joinands.push_back(x & (y[i] | y[j]));
  return make_identity("D2DUAL", {"x", "y0", "y1", "y2"}, Relation::equals, lhs,
                       join_all(joinands), true);
}

Identity identity_star() {
  const StarTerms terms = star_terms();
  // The declared order only affects iteration and witness order; x1 leads
  // because every joinand of t is below it.
  return make_identity("STAR", {"x1", "x0", "xb", "x2", "xa", "x3"}, Relation::below,
                       terms.x1_2, terms.s | terms.t);
}

}  // namespace

std::pair<Term, Term> star_iterates(unsigned n) {
  const Term x0 = var("x0"), x3 = var("x3"), xa = var("xa"), xb = var("xb");
  Term x1 = var("x1"), x2 = var("x2");
  for (unsigned k = 0; k < n; ++k) {
    Term next1 = x1 & (x0 | x2) & (x0 | xb);
    Term next2 = x2 & (x3 | x1) & (x3 | xa);
    x1 = std::move(next1);
    x2 = std::move(next2);
  }
  return {x1, x2};
}

StarTerms star_terms() {
  const Term x0 = var("x0"), x1 = var("x1"), x2 = var("x2"), x3 = var("x3");
  const Term xa = var("xa"), xb = var("xb");
  StarTerms terms;
  std::tie(terms.x1_0, terms.x2_0) = star_iterates(0);
  std::tie(terms.x1_1, terms.x2_1) = star_iterates(1);
  terms.x1_2 = star_iterates(2).first;
  terms.s = x1 & (x0 | ((x1 | xb) & (x2 | xa)));
  terms.t = Term::join({
      x1 & xb,
      x1 & (x0 | xa),
      x1 & (x2 | xa),
      x1 & (x0 | (x2 & (x1 | xa))),
      x1 & (x0 | (x2 & (x1 | xb))),
      x1 & (x0 | (x2 & (x3 | xb))),
  });
  return terms;
}

std::vector<std::string> builtin_names() { return {"E", "P", "HS", "STAR", "D2DUAL"}; }

Identity builtin_identity(std::string_view name) {
  if (name == "E") return identity_e();
  if (name == "P") return identity_p();
  if (name == "HS") return identity_hs();
  if (name == "STAR") return identity_star();
  if (name == "D2DUAL") return identity_d2dual();
  throw InputError("unknown built-in identity '" + std::string(name) +
                   "' (known: E, P, HS, STAR, D2DUAL)");
}

}  // namespace colat
