#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

/// Value table of a map between two lattices, indexed by source element.
struct LatticeMap {
  std::vector<Elem> values;

  Elem operator()(Elem x) const { return values.at(x); }
  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const LatticeMap&, const LatticeMap&) = default;
};

LatticeMap identity_map(std::size_t size);
/// x -> second(first(x)).
LatticeMap compose(const LatticeMap& first, const LatticeMap& second);

/// Checks join and meet preservation on all pairs (and that the table fits).
bool preserves_operations(const FinLattice& source, const FinLattice& target,
                          const LatticeMap& map);
bool is_injective(const LatticeMap& map);
bool is_surjective(const LatticeMap& map, std::size_t target_size);

struct HomSearch {
  bool injective = false;
  bool surjective = false;
  /// Pairs (x, y) of source elements that must satisfy h(x) ≰ h(y).
  std::vector<std::pair<Elem, Elem>> separate;
  unsigned workers = 1;
};

/// Lexicographically least homomorphism meeting the constraints, where maps
/// are compared on h(bottom) and then on the join-irreducibles of the source
/// in a fixed linear extension. Independent of the worker count.
std::optional<LatticeMap> find_homomorphism(const FinLattice& source,
                                            const FinLattice& target,
                                            const HomSearch& search = {});

/// Enumerates all homomorphisms meeting the constraints in the same order,
/// stopping early when `visit` returns false. Single-threaded.
void for_each_homomorphism(const FinLattice& source, const FinLattice& target,
                           const HomSearch& search,
                           const std::function<bool(const LatticeMap&)>& visit);

std::optional<LatticeMap> find_embedding(const FinLattice& source, const FinLattice& target,
                                         unsigned workers = 1);
std::optional<LatticeMap> find_isomorphism(const FinLattice& a, const FinLattice& b);
bool isomorphic(const FinLattice& a, const FinLattice& b);

/// All surjective homomorphisms, in search order; at most `limit` of them.
std::vector<LatticeMap> surjections(const FinLattice& source, const FinLattice& target,
                                    std::size_t limit = static_cast<std::size_t>(-1));

/// Projections of direct_product(left, right) onto its factors.
LatticeMap first_projection(const FinLattice& left, const FinLattice& right);
LatticeMap second_projection(const FinLattice& left, const FinLattice& right);

}  // namespace colat
