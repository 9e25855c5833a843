#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

/// Partition of a lattice compatible with join and meet. Blocks are numbered
/// in order of their least element index.
class Congruence {
 public:
  /// `block_of[x]` is any block id; ids are renumbered canonically.
  explicit Congruence(const std::vector<std::size_t>& block_of);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::size_t block_of(Elem x) const { return block_of_.at(x); }
  bool same(Elem x, Elem y) const { return block_of_.at(x) == block_of_.at(y); }
  std::vector<std::vector<Elem>> blocks() const;

  bool is_identity() const noexcept { return block_count_ == block_of_.size(); }
  /// Every block of *this lies inside a block of `other`.
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t block_count_ = 0;
};

/// True iff the partition given by `block_of` respects join and meet.
bool is_congruence(const FinLattice& lattice, const std::vector<std::size_t>& block_of);

/// Least congruence identifying a and b.
Congruence principal_congruence(const FinLattice& lattice, Elem a, Elem b);

/// Least nonidentity congruence, present iff the lattice is subdirectly
/// irreducible. Throws PreconditionError on the one-element lattice.
std::optional<Congruence> monolith(const FinLattice& lattice);

bool subdirectly_irreducible(const FinLattice& lattice);

}  // namespace colat
