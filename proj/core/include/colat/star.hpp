#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colat/lattice.hpp"
#include "colat/poset.hpp"

namespace colat {

/// A poset Q on {0,1,2,3,a,b,c} and P = Q minus c such that Co(Q) satisfies
/// STAR while Co(P) does not.
struct SeparationWitness {
  Poset q;
  std::size_t removed = 0;  // index of c in q
  Poset p;
  bool star_holds_q = false;
  bool star_holds_p = false;
  /// Values of both sides of STAR in Co(P) under x_i = {i}, i in
  /// {0,1,2,3,a,b}, as element indices of co_lattice(p).
  Elem singleton_lhs = 0;
  Elem singleton_rhs = 0;
  /// Least failing assignment on Co(P) in the identity's variable order.
  std::vector<Elem> p_counterexample;
};

struct PqSearchLog {
  std::size_t completions = 0;     // assignments to the free pairs
  std::size_t valid_posets = 0;    // completions that close to themselves
  std::size_t singleton_failures = 0;  // of those, Co(P) fails at singletons
  std::vector<std::string> lines;
};

/// Enumerates every poset on {0,1,2,3,a,b,c} containing 0<1<c<2<3, 1<b,
/// a<2, with 1 || a and 2 || b, over all completions of the remaining pairs
/// (0,a), (3,b), (a,b), (a,c), (b,c); returns the completions that separate,
/// in enumeration order. `log`, if given, records the counts.
std::vector<SeparationWitness> search_pq(unsigned workers = 1, PqSearchLog* log = nullptr);

struct SeparationReport {
  bool star_holds_p = false;
  bool star_holds_q = false;
  std::optional<std::vector<Elem>> p_counterexample;
  std::optional<std::vector<Elem>> q_counterexample;
  /// Co(Q) satisfies STAR and Co(P) fails it.
  bool separated() const { return star_holds_q && !star_holds_p; }
};

/// Checks STAR on Co(P) and Co(Q). P must be an induced sub-poset of Q
/// (matched by labels); throws InputError otherwise. The identity-level
/// separation implies that Co(P) is outside the variety generated by
/// Co(Q); that consequence is not computed.
SeparationReport verify_separation(const Poset& p, const Poset& q, unsigned workers = 1);

}  // namespace colat
