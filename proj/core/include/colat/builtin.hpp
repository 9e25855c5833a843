#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colat/term.hpp"

namespace colat {

/// Names accepted by builtin_identity: E, P, HS, STAR, D2DUAL.
std::vector<std::string> builtin_names();

/// Throws InputError for unknown names.
Identity builtin_identity(std::string_view name);

/// Intermediate terms of the STAR inequality x1^(2) <= s v t.
struct StarTerms {
  Term x1_0, x2_0;
  Term x1_1, x2_1;
  Term x1_2;
  Term s;
  Term t;
};

StarTerms star_terms();

/// x1^(n) and x2^(n) for any n.
std::pair<Term, Term> star_iterates(unsigned n);

}  // namespace colat
