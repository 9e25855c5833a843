#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

/// Minimal nontrivial join-covers of one join-irreducible element. Each cover
/// is an antichain of join-irreducibles listed in ascending index order; the
/// covers themselves are in lexicographic order.
struct MinCoverSet {
  Elem owner = 0;
  std::vector<std::vector<Elem>> covers;
};

/// p <= x v y with p not below x or y, and no strictly smaller x' or y' in
/// the lattice still covering p.
bool is_minimal_pair_cover(const FinLattice& lattice, Elem p, Elem x, Elem y);

MinCoverSet min_covers(const FinLattice& lattice, Elem p);

/// Join-dependency data for every join-irreducible of a lattice.
class DependencyData {
 public:
  explicit DependencyData(const FinLattice& lattice);

  const FinLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Elem>& irreducibles() const noexcept { return irreducibles_; }
  bool is_irreducible(Elem x) const { return index_.at(x) >= 0; }
  Elem lower_cover(Elem j) const;

  const MinCoverSet& covers(Elem p) const;
  /// a D b.
  bool depends(Elem a, Elem b) const;
  /// rd(a), ascending.
  const std::vector<Elem>& rd(Elem a) const;
  /// {a} together with rd(a), ascending.
  std::vector<Elem> j_a(Elem a) const;

 private:
  std::size_t slot(Elem j) const;

  FinLattice lattice_;
  std::vector<Elem> irreducibles_;
  std::vector<int> index_;
  std::vector<Elem> lower_covers_;
  std::vector<MinCoverSet> covers_;
  std::vector<std::vector<Elem>> rd_;
  std::vector<std::vector<std::uint8_t>> depends_;
};

struct InvariantResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  /// Elements of the first violation, if any.
  std::vector<Elem> witness;
  std::string note;
};

struct DependencyReport {
  std::vector<InvariantResult> results;

  bool all_passed() const;
};

struct DependencyCheckOptions {
  /// The interval-property check presupposes join-semidistributivity and
  /// identity (E); the caller decides whether it applies.
  bool check_interval_property = false;
};

/// D-transitivity, rd antichains, pair minimality inside rd(p), the
/// two-step minimality property and (optionally) the interval property.
DependencyReport check_dependency_invariants(const FinLattice& lattice,
                                             const DependencyCheckOptions& options = {});

}  // namespace colat
