#include "colat/congruence.hpp"

#include <numeric>

#include "colat/error.hpp"

namespace colat {

Congruence::Congruence(const std::vector<std::size_t>& block_of) {
  block_of_.resize(block_of.size());
  std::vector<std::size_t> seen_ids;
  for (std::size_t x = 0; x < block_of.size(); ++x) {
    std::size_t id = block_of[x];
    std::size_t k = 0;
    while (k < seen_ids.size() && seen_ids[k] != id) ++k;
    if (k == seen_ids.size()) seen_ids.push_back(id);
    block_of_[x] = k;
  }
  block_count_ = seen_ids.size();
}

std::vector<std::vector<Elem>> Congruence::blocks() const {
  std::vector<std::vector<Elem>> result(block_count_);
  for (std::size_t x = 0; x < block_of_.size(); ++x)
    result[block_of_[x]].push_back(static_cast<Elem>(x));
  return result;
}

bool Congruence::refines(const Congruence& other) const {
  if (other.size() != size()) return false;
  std::vector<std::size_t> image(block_count_, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < block_of_.size(); ++x) {
    auto& target = image[block_of_[x]];
    if (target == static_cast<std::size_t>(-1))
      target = other.block_of_[x];
    else if (target != other.block_of_[x])
      return false;
  }
  return true;
}

bool is_congruence(const FinLattice& lattice, const std::vector<std::size_t>& block_of) {
  const std::size_t n = lattice.size();
  if (block_of.size() != n) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (block_of[x] != block_of[y]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y),
                   ec = static_cast<Elem>(c);
        if (block_of[lattice.join(ex, ec)] != block_of[lattice.join(ey, ec)] ||
            block_of[lattice.meet(ex, ec)] != block_of[lattice.meet(ey, ec)])
          return false;
      }
    }
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence principal_congruence(const FinLattice& lattice, Elem a, Elem b) {
  const std::size_t n = lattice.size();
  if (a >= n || b >= n) throw InputError("unknown element index");
  UnionFind uf(n);
  uf.unite(a, b);
  // The equivalence is generated by the pairs (x, root(x)); closing those
  // pairs under translations x -> x v c and x -> x ^ c yields compatibility.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t root = uf.find(x);
      if (root == x) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const auto ex = static_cast<Elem>(x), er = static_cast<Elem>(root),
                   ec = static_cast<Elem>(c);
        changed |= uf.unite(lattice.join(ex, ec), lattice.join(er, ec));
        changed |= uf.unite(lattice.meet(ex, ec), lattice.meet(er, ec));
      }
    }
  }
  std::vector<std::size_t> block_of(n);
  for (std::size_t x = 0; x < n; ++x) block_of[x] = uf.find(x);
  return Congruence(block_of);
}

std::optional<Congruence> monolith(const FinLattice& lattice) {
  if (lattice.size() < 2)
    throw PreconditionError("the one-element lattice has no nonidentity congruence");
  // Every nonidentity congruence collapses some covering pair, so the atoms
  // of the congruence lattice are among the Θ(a, b) with a covered by b.
  std::vector<Congruence> candidates;
  for (auto [lo, hi] : lattice.covers()) {
    Congruence theta = principal_congruence(lattice, lo, hi);
    bool known = false;
    for (const auto& c : candidates)
      if (c == theta) {
        known = true;
        break;
      }
    if (!known) candidates.push_back(std::move(theta));
  }
  for (const auto& candidate : candidates) {
    bool least = true;
    for (const auto& other : candidates)
      if (!candidate.refines(other)) {
        least = false;
        break;
      }
    if (least) return candidate;
  }
  return std::nullopt;
}

bool subdirectly_irreducible(const FinLattice& lattice) {
  return lattice.size() >= 2 && monolith(lattice).has_value();
}

}  // namespace colat
