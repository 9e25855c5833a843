#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

enum class SigmaCondition { E, P, HS };

SigmaCondition parse_sigma_condition(std::string_view name);
std::string to_string(SigmaCondition condition);

struct SigmaResult {
  bool holds = true;
  /// Names of the quantified variables, in witness order.
  std::vector<std::string> roles;
  /// First failing tuple of join-irreducibles (lexicographic in roles).
  std::optional<std::vector<Elem>> witness;
};

/// Evaluates the join-irreducible interpretation of (E), (P) or (HS) with
/// the quantifiers ranging over all join-irreducibles of the lattice.
SigmaResult check_sigma(const FinLattice& lattice, SigmaCondition condition);

/// a <= b v c with a not below b_* v c, where b_* is the lower cover of the
/// join-irreducible b.
bool minimal_in_first(const FinLattice& lattice, Elem a, Elem b, Elem c);

}  // namespace colat
