#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colat/homomorphism.hpp"
#include "colat/lattice.hpp"
#include "colat/poset.hpp"
#include "colat/tracks.hpp"

namespace colat {

/// Co of the n-element chain {0 < 1 < ... < n-1}.
CoLattice co_chain(std::size_t n);

/// L_{m,n}: the convex sets X of the (m+n+1)-chain with m in X => m-1 in X.
/// `sets` holds the members; the order of elements is inherited from
/// co_chain(m+n+1).
CoLattice l_mn(std::size_t m, std::size_t n);

/// Index of the singleton {i} (i != m) or of c_m = {m-1, m} in l_mn(m, n).
Elem l_mn_singleton(const CoLattice& lmn, std::size_t i);
Elem l_mn_cm(const CoLattice& lmn, std::size_t m);

FinLattice diamond_m3();
FinLattice pentagon_n5();
/// The Boolean lattice 2^k; element i is the subset with bit pattern i.
FinLattice boolean_lattice(std::size_t k);

/// sigma_0 = (c_m, {m-1}, ..., {0}) with side {m+n}; tau_0 = (c_m, {m+1},
/// ..., {m+n}) with side {0}; indices refer to l_mn(m, n).
WeakBiTrack canonical_bitrack(std::size_t m, std::size_t n);

struct SIClass {
  enum class Kind { co_chain, lmn, not_si, not_member };
  Kind kind = Kind::not_member;
  std::size_t m = 0;  // chain length for co_chain, first index for lmn
  std::size_t n = 0;  // second index for lmn
  /// Isomorphism from the catalog lattice onto the input, for the two
  /// catalog kinds.
  std::optional<LatticeMap> isomorphism;

  std::string to_string() const;
};

/// NotMember when membership in SUB(LO) is rejected, NotSI when there is no
/// monolith, otherwise the matching catalog entry. Throws IntegrityError if
/// an SI member matches nothing.
SIClass classify_si(const FinLattice& lattice, unsigned workers = 1);

struct VarietyPosition {
  std::size_t least_n = 0;
  /// Diagnostic only: names of catalog SI lattices that embed into the
  /// input, e.g. "CoChain(3)", "Lmn(1,1)".
  std::vector<std::string> embedded_si;
};

/// Throws PreconditionError if the lattice is not in SUB(LO).
VarietyPosition variety_position(const FinLattice& lattice, unsigned workers = 1);

}  // namespace colat
