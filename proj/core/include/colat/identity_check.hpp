#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colat/lattice.hpp"
#include "colat/term.hpp"

namespace colat {

struct CheckOptions {
  /// For equations marked rhs_below_lhs, only test lhs <= rhs.
  bool use_known_inclusion = true;
  /// Skip subtrees where monotone bounds already settle the comparison.
  bool prune = true;
  unsigned workers = 1;
  /// Refuse when |L|^#vars exceeds this; 0 disables the guard.
  std::uint64_t max_assignments = 0;
};

struct CheckResult {
  bool holds = true;
  /// Lexicographically least failing assignment, in declared variable order.
  std::optional<std::vector<Elem>> counterexample;
};

/// Exhaustive check over all assignments, using a compiled, hash-consed
/// evaluation program with per-variable hoisting.
CheckResult check_identity(const FinLattice& lattice, const Identity& identity,
                           const CheckOptions& options = {});

/// Reference implementation: plain nested loop with recursive evaluation and
/// no shortcuts at all.
CheckResult check_identity_naive(const FinLattice& lattice, const Identity& identity);

/// True iff the assignment violates the identity (both sides compared as
/// the relation says; known inclusions are not used).
bool violates(const FinLattice& lattice, const Identity& identity,
              const std::vector<Elem>& assignment);

/// |L|^#vars, saturating at UINT64_MAX.
std::uint64_t assignment_count(std::size_t lattice_size, std::size_t variables);

}  // namespace colat
