#include "colat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "colat/error.hpp"

namespace colat {

namespace {

using Row = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

bool test_bit(const Row& row, std::size_t i) {
  return (row[i / 64] >> (i % 64)) & 1u;
}

void set_bit(Row& row, std::size_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }

bool subset_of(const Row& a, const Row& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

void check_labels(std::size_t n, std::vector<std::string>& labels) {
  if (labels.empty()) {
    labels = default_labels(n);
    return;
  }
  if (labels.size() != n)
    throw InputError("label count " + std::to_string(labels.size()) +
                     " does not match size " + std::to_string(n));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != n) throw InputError("lattice labels are not unique");
}

void check_size(std::size_t n) {
  if (n == 0) throw InputError("a lattice needs at least one element");
  if (n > kMaxLatticeSize)
    throw SizeGuardError("lattice size " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxLatticeSize));
}

}  // namespace

FinLattice FinLattice::from_pairs(
    std::size_t size, std::span<const std::pair<std::size_t, std::size_t>> pairs,
    std::vector<std::string> labels) {
  check_size(size);
  const std::size_t words = words_for(size);
  std::vector<Row> up(size, Row(words, 0));
  for (std::size_t i = 0; i < size; ++i) set_bit(up[i], i);
  for (auto [lo, hi] : pairs) {
    if (lo >= size || hi >= size)
      throw InputError("order pair (" + std::to_string(lo) + ", " +
                       std::to_string(hi) + ") references an unknown element");
    set_bit(up[lo], hi);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t i = 0; i < size; ++i)
      if (test_bit(up[i], k))
        for (std::size_t w = 0; w < words; ++w) up[i][w] |= up[k][w];
  std::vector<std::uint8_t> leq(size * size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) leq[i * size + j] = test_bit(up[i], j);
  return from_order(size, std::move(leq), std::move(labels));
}

FinLattice FinLattice::from_order(std::size_t size, std::vector<std::uint8_t> leq,
                                  std::vector<std::string> labels) {
  check_size(size);
  if (leq.size() != size * size) throw InputError("order matrix has wrong size");
  check_labels(size, labels);
  for (auto& v : leq) v = v ? 1 : 0;
  for (std::size_t i = 0; i < size; ++i) {
    if (!leq[i * size + i]) throw InputError("order is not reflexive");
    for (std::size_t j = i + 1; j < size; ++j)
      if (leq[i * size + j] && leq[j * size + i])
        throw InputError("order is not antisymmetric (" + labels[i] + ", " +
                         labels[j] + ")");
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t k = 0; k < size; ++k)
      if (leq[i * size + k])
        for (std::size_t j = 0; j < size; ++j)
          if (leq[k * size + j] && !leq[i * size + j])
            throw InputError("order is not transitive");
  FinLattice lattice;
  lattice.n_ = size;
  lattice.leq_ = std::move(leq);
  lattice.labels_ = std::move(labels);
  lattice.build_tables();
  return lattice;
}

FinLattice FinLattice::from_join_table(std::size_t size, std::vector<Elem> join,
                                       std::vector<std::string> labels) {
  check_size(size);
  if (join.size() != size * size) throw InputError("join table has wrong size");
  std::vector<std::uint8_t> leq(size * size, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      if (join[i * size + j] >= size) throw InputError("join table entry out of range");
      leq[i * size + j] = join[i * size + j] == j;
    }
  FinLattice lattice = from_order(size, std::move(leq), std::move(labels));
  if (!std::equal(join.begin(), join.end(), lattice.join_.begin()))
    throw InputError("join table is not the join of its induced order");
  return lattice;
}

FinLattice FinLattice::chain(std::size_t size) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < size; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(size, pairs);
}

void FinLattice::build_tables() {
  const std::size_t n = n_;
  const std::size_t words = words_for(n);
  std::vector<Row> up(n, Row(words, 0)), down(n, Row(words, 0));
  std::vector<std::size_t> down_size(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_[i * n + j]) {
        set_bit(up[i], j);
        set_bit(down[j], i);
        ++down_size[j];
      }
  std::vector<Elem> ext(n);
  std::iota(ext.begin(), ext.end(), Elem{0});
  std::stable_sort(ext.begin(), ext.end(),
                   [&](Elem a, Elem b) { return down_size[a] < down_size[b]; });

  join_.assign(n * n, 0);
  meet_.assign(n * n, 0);
  Row common(words);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      for (std::size_t w = 0; w < words; ++w) common[w] = up[x][w] & up[y][w];
      std::optional<Elem> lub;
      for (Elem z : ext)
        if (test_bit(common, z)) {
          lub = z;
          break;
        }
      if (!lub || !subset_of(common, up[*lub]))
        throw InputError("elements " + labels_[x] + " and " + labels_[y] +
                         " have no join");
      for (std::size_t w = 0; w < words; ++w) common[w] = down[x][w] & down[y][w];
      std::optional<Elem> glb;
      for (auto it = ext.rbegin(); it != ext.rend(); ++it)
        if (test_bit(common, *it)) {
          glb = *it;
          break;
        }
      if (!glb || !subset_of(common, down[*glb]))
        throw InputError("elements " + labels_[x] + " and " + labels_[y] +
                         " have no meet");
      join_[x * n + y] = join_[y * n + x] = *lub;
      meet_[x * n + y] = meet_[y * n + x] = *glb;
    }
  }
  bottom_ = ext.front();
  top_ = ext.back();
  for (std::size_t x = 0; x < n; ++x)
    if (!leq_[bottom_ * n + x] || !leq_[x * n + top_])
      throw InputError("lattice has no bounds");
}

std::optional<Elem> FinLattice::find(std::string_view label) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

std::vector<std::pair<Elem, Elem>> FinLattice::covers() const {
  std::vector<std::pair<Elem, Elem>> result;
  for (std::size_t x = 0; x < n_; ++x)
    for (Elem y : upper_covers(static_cast<Elem>(x)))
      result.emplace_back(static_cast<Elem>(x), y);
  return result;
}

std::vector<Elem> FinLattice::lower_covers(Elem x) const {
  std::vector<Elem> result;
  for (std::size_t y = 0; y < n_; ++y) {
    if (!lt(static_cast<Elem>(y), x)) continue;
    bool covered = true;
    for (std::size_t z = 0; z < n_ && covered; ++z)
      if (lt(static_cast<Elem>(y), static_cast<Elem>(z)) && lt(static_cast<Elem>(z), x))
        covered = false;
    if (covered) result.push_back(static_cast<Elem>(y));
  }
  return result;
}

std::vector<Elem> FinLattice::upper_covers(Elem x) const {
  std::vector<Elem> result;
  for (std::size_t y = 0; y < n_; ++y) {
    if (!lt(x, static_cast<Elem>(y))) continue;
    bool covered = true;
    for (std::size_t z = 0; z < n_ && covered; ++z)
      if (lt(x, static_cast<Elem>(z)) && lt(static_cast<Elem>(z), static_cast<Elem>(y)))
        covered = false;
    if (covered) result.push_back(static_cast<Elem>(y));
  }
  return result;
}

std::size_t FinLattice::down_count(Elem x) const {
  std::size_t count = 0;
  for (std::size_t y = 0; y < n_; ++y) count += leq_[y * n_ + x];
  return count;
}

FinLattice FinLattice::relabeled(std::vector<std::string> labels) const {
  FinLattice copy = *this;
  check_labels(n_, labels);
  copy.labels_ = std::move(labels);
  return copy;
}

std::vector<Elem> join_irreducibles(const FinLattice& lattice) {
  std::vector<Elem> result;
  for (std::size_t x = 0; x < lattice.size(); ++x) {
    const auto e = static_cast<Elem>(x);
    if (e != lattice.bottom() && lattice.lower_covers(e).size() == 1)
      result.push_back(e);
  }
  return result;
}

Elem lower_cover_of_irreducible(const FinLattice& lattice, Elem j) {
  if (j >= lattice.size()) throw InputError("unknown element index");
  auto lower = lattice.lower_covers(j);
  if (j == lattice.bottom() || lower.size() != 1)
    throw PreconditionError("element " + lattice.label(j) +
                            " is not join-irreducible");
  return lower.front();
}

StructuralPredicates structural_predicates(const FinLattice& lattice) {
  const std::size_t n = lattice.size();
  StructuralPredicates result{true, true, true};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b),
                   z = static_cast<Elem>(c);
        if (result.distributive &&
            lattice.meet(x, lattice.join(y, z)) !=
                lattice.join(lattice.meet(x, y), lattice.meet(x, z)))
          result.distributive = false;
        if (result.join_semidistributive && lattice.join(x, y) == lattice.join(x, z) &&
            lattice.join(x, y) != lattice.join(x, lattice.meet(y, z)))
          result.join_semidistributive = false;
      }
  // x ^ (y0 v y1 v y2) = V_{i<j} x ^ (yi v yj)
  for (std::size_t x = 0; x < n && result.dual_2_distributive; ++x)
    for (std::size_t y0 = 0; y0 < n && result.dual_2_distributive; ++y0)
      for (std::size_t y1 = y0; y1 < n && result.dual_2_distributive; ++y1)
        for (std::size_t y2 = y1; y2 < n; ++y2) {
          const auto ex = static_cast<Elem>(x);
          const auto e0 = static_cast<Elem>(y0), e1 = static_cast<Elem>(y1),
                     e2 = static_cast<Elem>(y2);
          Elem lhs = lattice.meet(ex, lattice.join(lattice.join(e0, e1), e2));
          Elem rhs = lattice.join(
              lattice.join(lattice.meet(ex, lattice.join(e0, e1)),
                           lattice.meet(ex, lattice.join(e0, e2))),
              lattice.meet(ex, lattice.join(e1, e2)));
          if (lhs != rhs) {
            result.dual_2_distributive = false;
            break;
          }
        }
  return result;
}

FinLattice direct_product(const FinLattice& left, const FinLattice& right) {
  const std::size_t n = left.size() * right.size();
  if (n > kMaxLatticeSize) throw SizeGuardError("product lattice too large");
  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<std::string> labels(n);
  const std::size_t r = right.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Elem>(i / r), b = static_cast<Elem>(i % r);
    labels[i] = "(" + left.label(a) + "," + right.label(b) + ")";
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = static_cast<Elem>(j / r), d = static_cast<Elem>(j % r);
      leq[i * n + j] = left.leq(a, c) && right.leq(b, d);
    }
  }
  return FinLattice::from_order(n, std::move(leq), std::move(labels));
}

FinLattice sublattice(const FinLattice& lattice, std::span<const Elem> elements) {
  const std::size_t k = elements.size();
  std::vector<int> position(lattice.size(), -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (elements[i] >= lattice.size()) throw InputError("unknown element index");
    if (position[elements[i]] >= 0) throw InputError("duplicate sublattice element");
    position[elements[i]] = static_cast<int>(i);
  }
  std::vector<std::uint8_t> leq(k * k, 0);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = lattice.label(elements[i]);
    for (std::size_t j = 0; j < k; ++j) {
      leq[i * k + j] = lattice.leq(elements[i], elements[j]);
      if (position[lattice.join(elements[i], elements[j])] < 0 ||
          position[lattice.meet(elements[i], elements[j])] < 0)
        throw InputError("element set is not closed under join and meet");
    }
  }
  return FinLattice::from_order(k, std::move(leq), std::move(labels));
}

std::vector<std::uint64_t> order_profile(const FinLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<std::uint64_t> profile(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Elem>(x);
    std::uint64_t down = 0, up = 0;
    for (std::size_t y = 0; y < n; ++y) {
      down += lattice.leq(static_cast<Elem>(y), e);
      up += lattice.leq(e, static_cast<Elem>(y));
    }
    const std::uint64_t lower = lattice.lower_covers(e).size();
    const std::uint64_t upper = lattice.upper_covers(e).size();
    profile[x] = (down << 48) | (up << 32) | (lower << 16) | upper;
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace colat
