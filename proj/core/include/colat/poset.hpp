#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

/// Subset of poset elements, bit i = element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxPosetSize = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

/// Finite partial order on elements 0..n-1 with distinct labels.
class Poset {
 public:
  /// Order generated by the covering pairs (lower, upper). The closure is
  /// validated for antisymmetry.
  static Poset from_covers(std::vector<std::string> labels,
                           std::span<const std::pair<std::size_t, std::size_t>> covers);
  static Poset from_order(std::size_t size, std::vector<std::uint8_t> leq,
                          std::vector<std::string> labels = {});
  static Poset chain(std::size_t size);
  static Poset antichain(std::size_t size);

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t x, std::size_t y) const noexcept { return (up_[x] >> y) & 1u; }
  bool lt(std::size_t x, std::size_t y) const noexcept { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const noexcept {
    return leq(x, y) || leq(y, x);
  }
  Mask up_mask(std::size_t x) const noexcept { return up_[x]; }
  Mask down_mask(std::size_t x) const noexcept { return down_[x]; }
  Mask all() const noexcept { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  const std::string& label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  /// Covering pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// Sub-poset on the given elements with the induced order, in the given
  /// order.
  Poset induced(std::span<const std::size_t> elements) const;
  /// Sub-poset with one element removed.
  Poset without(std::size_t element) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_ && a.labels_ == b.labels_;
  }

 private:
  Poset() = default;

  std::size_t n_ = 0;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::string> labels_;
};

struct ConvexSet {
  Mask members = 0;

  bool contains(std::size_t i) const noexcept { return (members >> i) & 1u; }
  std::vector<std::size_t> elements() const;
  friend bool operator==(const ConvexSet&, const ConvexSet&) = default;
};

/// Throws InputError when `set` names elements outside the poset.
void check_subset(const Poset& poset, Mask set);
Mask mask_of(const Poset& poset, std::span<const std::size_t> elements);

bool is_convex(const Poset& poset, Mask set);
bool is_convex(const Poset& poset, std::span<const std::size_t> elements);

/// Smallest convex superset: the intersection of the up-set and the down-set
/// generated by `set`.
ConvexSet convex_hull(const Poset& poset, Mask set);
ConvexSet convex_hull(const Poset& poset, std::span<const std::size_t> elements);

/// The lattice of order-convex subsets together with the set behind each
/// lattice element. Sets are ordered by size, then lexicographically by
/// sorted element list; element 0 is the empty set and, when the poset is
/// nonempty, element i + 1 is the singleton {i}.
struct CoLattice {
  FinLattice lattice;
  std::vector<ConvexSet> sets;

  std::optional<Elem> index_of(Mask set) const;
};

CoLattice co_lattice(const Poset& poset);

Poset dual_poset(const Poset& poset);

/// "{a,b}" using poset labels, elements ascending by index.
std::string format_set(const Poset& poset, Mask set);

}  // namespace colat
