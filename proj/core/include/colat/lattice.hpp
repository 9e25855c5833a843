#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace colat {

/// Index of a lattice element. Elements are numbered densely from 0.
using Elem = std::uint16_t;

inline constexpr std::size_t kMaxLatticeSize = 4096;

/// A finite lattice stored as its order matrix together with join and meet
/// tables. Instances are immutable once built and validated.
class FinLattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `pairs` (each pair reads "first <= second"). Throws InputError when the
  /// closure is not antisymmetric or some pair of elements lacks a join or a
  /// meet.
  static FinLattice from_pairs(
      std::size_t size,
      std::span<const std::pair<std::size_t, std::size_t>> pairs,
      std::vector<std::string> labels = {});

  /// Builds the lattice from a full row-major order matrix; the matrix must
  /// already be a partial order.
  static FinLattice from_order(std::size_t size, std::vector<std::uint8_t> leq,
                               std::vector<std::string> labels = {});

  /// Builds a lattice from a join table alone (x <= y iff x v y = y).
  static FinLattice from_join_table(std::size_t size, std::vector<Elem> join,
                                    std::vector<std::string> labels = {});

  static FinLattice chain(std::size_t size);

  std::size_t size() const noexcept { return n_; }
  bool leq(Elem x, Elem y) const noexcept { return leq_[x * n_ + y] != 0; }
  bool lt(Elem x, Elem y) const noexcept { return x != y && leq(x, y); }
  Elem join(Elem x, Elem y) const noexcept { return join_[x * n_ + y]; }
  Elem meet(Elem x, Elem y) const noexcept { return meet_[x * n_ + y]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  std::span<const Elem> join_table() const noexcept { return join_; }
  std::span<const Elem> meet_table() const noexcept { return meet_; }
  std::span<const std::uint8_t> order_matrix() const noexcept { return leq_; }

  const std::string& label(Elem x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  /// Covering pairs (lower, upper), sorted.
  std::vector<std::pair<Elem, Elem>> covers() const;
  std::vector<Elem> lower_covers(Elem x) const;
  std::vector<Elem> upper_covers(Elem x) const;

  /// Number of elements below x (x included).
  std::size_t down_count(Elem x) const;

  FinLattice relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const FinLattice& a, const FinLattice& b) {
    return a.n_ == b.n_ && a.leq_ == b.leq_;
  }

 private:
  FinLattice() = default;
  void build_tables();

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::string> labels_;
};

/// Join-irreducible elements in ascending index order: non-bottom elements
/// with exactly one lower cover.
std::vector<Elem> join_irreducibles(const FinLattice& lattice);

/// Unique lower cover of a join-irreducible element. Throws PreconditionError
/// when `j` is not join-irreducible.
Elem lower_cover_of_irreducible(const FinLattice& lattice, Elem j);

struct StructuralPredicates {
  bool distributive = false;
  bool join_semidistributive = false;
  bool dual_2_distributive = false;
};

StructuralPredicates structural_predicates(const FinLattice& lattice);

/// Product lattice with componentwise order; element (a, b) has index
/// a * right.size() + b.
FinLattice direct_product(const FinLattice& left, const FinLattice& right);

/// Sublattice on the given elements (kept in the given order). Throws
/// InputError if the set is not closed under join and meet.
FinLattice sublattice(const FinLattice& lattice, std::span<const Elem> elements);

/// Cheap isomorphism invariant: sorted (down-set size, up-set size, cover
/// degrees) profile of all elements.
std::vector<std::uint64_t> order_profile(const FinLattice& lattice);

}  // namespace colat
