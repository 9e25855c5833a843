#include "colat/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <set>

#include "colat/error.hpp"

namespace colat {

namespace {

void check_poset_size(std::size_t n) {
  if (n > kMaxPosetSize)
    throw SizeGuardError("poset size " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxPosetSize));
}

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         std::span<const std::pair<std::size_t, std::size_t>> covers) {
  const std::size_t n = labels.size();
  check_poset_size(n);
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n)
      throw InputError("cover (" + std::to_string(lo) + ", " + std::to_string(hi) +
                       ") references an unknown element");
    leq[lo * n + hi] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  return from_order(n, std::move(leq), std::move(labels));
}

Poset Poset::from_order(std::size_t size, std::vector<std::uint8_t> leq,
                        std::vector<std::string> labels) {
  check_poset_size(size);
  if (leq.size() != size * size) throw InputError("order matrix has wrong size");
  if (labels.empty()) labels = numbered_labels(size);
  if (labels.size() != size) throw InputError("label count does not match poset size");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != size)
    throw InputError("poset labels are not unique");
  Poset poset;
  poset.n_ = size;
  poset.labels_ = std::move(labels);
  poset.up_.assign(size, 0);
  poset.down_.assign(size, 0);
  for (std::size_t i = 0; i < size; ++i) {
    if (!leq[i * size + i]) throw InputError("order is not reflexive");
    for (std::size_t j = 0; j < size; ++j)
      if (leq[i * size + j]) {
        if (i != j && leq[j * size + i])
          throw InputError("order is not antisymmetric (" + poset.labels_[i] + ", " +
                           poset.labels_[j] + ")");
        poset.up_[i] |= bit(j);
        poset.down_[j] |= bit(i);
      }
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (poset.leq(i, j) && (poset.up_[j] & ~poset.up_[i]))
        throw InputError("order is not transitive");
  return poset;
}

Poset Poset::chain(std::size_t size) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i + 1 < size; ++i) covers.emplace_back(i, i + 1);
  return from_covers(numbered_labels(size), covers);
}

Poset Poset::antichain(std::size_t size) { return from_covers(numbered_labels(size), {}); }

std::optional<std::size_t> Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> result;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      // y covers x iff nothing lies strictly between them.
      Mask between = up_[x] & down_[y] & ~bit(x) & ~bit(y);
      if (between == 0) result.emplace_back(x, y);
    }
  return result;
}

Poset Poset::induced(std::span<const std::size_t> elements) const {
  const std::size_t k = elements.size();
  std::vector<std::uint8_t> order(k * k, 0);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (elements[i] >= n_) throw InputError("unknown element index");
    labels[i] = labels_[elements[i]];
    for (std::size_t j = 0; j < k; ++j) order[i * k + j] = leq(elements[i], elements[j]);
  }
  return from_order(k, std::move(order), std::move(labels));
}

Poset Poset::without(std::size_t element) const {
  if (element >= n_) throw InputError("unknown element index");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n_; ++i)
    if (i != element) kept.push_back(i);
  return induced(kept);
}

std::vector<std::size_t> ConvexSet::elements() const {
  std::vector<std::size_t> result;
  for (Mask m = members; m; m &= m - 1) result.push_back(std::countr_zero(m));
  return result;
}

void check_subset(const Poset& poset, Mask set) {
  if (set & ~poset.all())
    throw InputError("element index " + std::to_string(std::countr_zero(set & ~poset.all())) +
                     " is not in the poset");
}

Mask mask_of(const Poset& poset, std::span<const std::size_t> elements) {
  Mask set = 0;
  for (std::size_t e : elements) {
    if (e >= poset.size())
      throw InputError("element index " + std::to_string(e) + " is not in the poset");
    set |= bit(e);
  }
  return set;
}

ConvexSet convex_hull(const Poset& poset, Mask set) {
  check_subset(poset, set);
  Mask up = 0, down = 0;
  for (Mask m = set; m; m &= m - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    up |= poset.up_mask(i);
    down |= poset.down_mask(i);
  }
  const Mask hull = up & down;
#ifndef NDEBUG
  Mask up2 = 0, down2 = 0;
  for (Mask m = hull; m; m &= m - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    up2 |= poset.up_mask(i);
    down2 |= poset.down_mask(i);
  }
  assert((up2 & down2) == hull);
#endif
  return ConvexSet{hull};
}

ConvexSet convex_hull(const Poset& poset, std::span<const std::size_t> elements) {
  return convex_hull(poset, mask_of(poset, elements));
}

bool is_convex(const Poset& poset, Mask set) { return convex_hull(poset, set).members == set; }

bool is_convex(const Poset& poset, std::span<const std::size_t> elements) {
  return is_convex(poset, mask_of(poset, elements));
}

std::optional<Elem> CoLattice::index_of(Mask set) const {
  auto it = std::find_if(sets.begin(), sets.end(),
                         [&](const ConvexSet& s) { return s.members == set; });
  if (it == sets.end()) return std::nullopt;
  return static_cast<Elem>(it - sets.begin());
}

CoLattice co_lattice(const Poset& poset) {
  const std::size_t n = poset.size();
  // Every nonempty convex set arises from a smaller one by adding a maximal
  // element, so closing {} under "add one element, take the hull" finds all.
  std::set<Mask> found{0};
  std::deque<Mask> queue{0};
  while (!queue.empty()) {
    const Mask current = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if ((current >> i) & 1u) continue;
      const Mask next = convex_hull(poset, current | bit(i)).members;
      if (found.insert(next).second) {
        if (found.size() > kMaxLatticeSize)
          throw SizeGuardError("poset has more than " + std::to_string(kMaxLatticeSize) +
                               " convex subsets");
        queue.push_back(next);
      }
    }
  }
  std::vector<ConvexSet> sets;
  sets.reserve(found.size());
  for (Mask m : found) sets.push_back(ConvexSet{m});
  std::sort(sets.begin(), sets.end(), [](const ConvexSet& a, const ConvexSet& b) {
    const int pa = std::popcount(a.members), pb = std::popcount(b.members);
    if (pa != pb) return pa < pb;
    return a.elements() < b.elements();
  });
  const std::size_t size = sets.size();
  std::vector<std::uint8_t> leq(size * size, 0);
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) {
    labels[i] = format_set(poset, sets[i].members);
    for (std::size_t j = 0; j < size; ++j)
      leq[i * size + j] = (sets[i].members & ~sets[j].members) == 0;
  }
  return CoLattice{FinLattice::from_order(size, std::move(leq), std::move(labels)),
                   std::move(sets)};
}

Poset dual_poset(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = poset.leq(j, i);
  return Poset::from_order(n, std::move(leq), poset.labels());
}

std::string format_set(const Poset& poset, Mask set) {
  std::string out = "{";
  bool first = true;
  for (Mask m = set; m; m &= m - 1) {
    if (!first) out += ',';
    first = false;
    out += poset.label(static_cast<std::size_t>(std::countr_zero(m)));
  }
  out += '}';
  return out;
}

}  // namespace colat
