#include "colat/dependency.hpp"

#include <algorithm>

#include "colat/error.hpp"

namespace colat {

bool is_minimal_pair_cover(const FinLattice& lattice, Elem p, Elem x, Elem y) {
  if (lattice.leq(p, x) || lattice.leq(p, y) || !lattice.leq(p, lattice.join(x, y)))
    return false;
  for (std::size_t z = 0; z < lattice.size(); ++z) {
    const auto e = static_cast<Elem>(z);
    if (lattice.lt(e, x) && lattice.leq(p, lattice.join(e, y))) return false;
    if (lattice.lt(e, y) && lattice.leq(p, lattice.join(x, e))) return false;
  }
  return true;
}

namespace {

struct CoverSearch {
  const FinLattice& lattice;
  Elem p;
  std::vector<Elem> candidates;
  std::vector<Elem> lower;  // lower cover per candidate slot
  std::vector<Elem> suffix_join;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Elem>> found;

  bool minimal(const std::vector<std::size_t>& slots) const {
    for (std::size_t skip = 0; skip < slots.size(); ++skip) {
      Elem value = lower[slots[skip]];
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (k != skip) value = lattice.join(value, candidates[slots[k]]);
      if (lattice.leq(p, value)) return false;
    }
    return true;
  }

  void extend(std::size_t from, Elem current) {
    for (std::size_t s = from; s < candidates.size(); ++s) {
      if (!lattice.leq(p, lattice.join(current, suffix_join[s]))) return;
      const Elem c = candidates[s];
      bool antichain = true;
      for (std::size_t k : chosen)
        if (lattice.leq(c, candidates[k]) || lattice.leq(candidates[k], c)) {
          antichain = false;
          break;
        }
      if (!antichain) continue;
      const Elem next = lattice.join(current, c);
      chosen.push_back(s);
      if (lattice.leq(p, next)) {
        if (minimal(chosen)) {
          std::vector<Elem> cover;
          for (std::size_t k : chosen) cover.push_back(candidates[k]);
          found.push_back(std::move(cover));
        }
      } else {
        extend(s + 1, next);
      }
      chosen.pop_back();
    }
  }
};

}  // namespace

MinCoverSet min_covers(const FinLattice& lattice, Elem p) {
  if (p >= lattice.size()) throw InputError("unknown element index");
  lower_cover_of_irreducible(lattice, p);  // validates p
  CoverSearch search{lattice, p, {}, {}, {}, {}, {}};
  for (Elem j : join_irreducibles(lattice))
    if (!lattice.leq(p, j)) {
      search.candidates.push_back(j);
      search.lower.push_back(lower_cover_of_irreducible(lattice, j));
    }
  const std::size_t k = search.candidates.size();
  search.suffix_join.assign(k + 1, lattice.bottom());
  for (std::size_t s = k; s-- > 0;)
    search.suffix_join[s] = lattice.join(search.suffix_join[s + 1], search.candidates[s]);
  search.extend(0, lattice.bottom());
  std::sort(search.found.begin(), search.found.end());
  return MinCoverSet{p, std::move(search.found)};
}

DependencyData::DependencyData(const FinLattice& lattice)
    : lattice_(lattice), irreducibles_(join_irreducibles(lattice)) {
  index_.assign(lattice_.size(), -1);
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    index_[irreducibles_[i]] = static_cast<int>(i);
  const std::size_t k = irreducibles_.size();
  depends_.assign(k, std::vector<std::uint8_t>(k, 0));
  rd_.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    lower_covers_.push_back(lower_cover_of_irreducible(lattice_, irreducibles_[i]));
    covers_.push_back(min_covers(lattice_, irreducibles_[i]));
    for (const auto& cover : covers_.back().covers)
      for (Elem b : cover) depends_[i][static_cast<std::size_t>(index_[b])] = 1;
    for (std::size_t j = 0; j < k; ++j)
      if (depends_[i][j]) rd_[i].push_back(irreducibles_[j]);
  }
}

std::size_t DependencyData::slot(Elem j) const {
  if (j >= index_.size() || index_[j] < 0)
    throw PreconditionError("element " + std::to_string(j) + " is not join-irreducible");
  return static_cast<std::size_t>(index_[j]);
}

Elem DependencyData::lower_cover(Elem j) const { return lower_covers_[slot(j)]; }

const MinCoverSet& DependencyData::covers(Elem p) const { return covers_[slot(p)]; }

bool DependencyData::depends(Elem a, Elem b) const { return depends_[slot(a)][slot(b)] != 0; }

const std::vector<Elem>& DependencyData::rd(Elem a) const { return rd_[slot(a)]; }

std::vector<Elem> DependencyData::j_a(Elem a) const {
  std::vector<Elem> result = rd(a);
  result.push_back(a);
  std::sort(result.begin(), result.end());
  return result;
}

bool DependencyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const InvariantResult& r) { return !r.applicable || r.passed; });
}

namespace {

void fail(InvariantResult& result, std::vector<Elem> witness) {
  if (!result.passed) return;
  result.passed = false;
  result.witness = std::move(witness);
}

}  // namespace

DependencyReport check_dependency_invariants(const FinLattice& lattice,
                                             const DependencyCheckOptions& options) {
  const DependencyData data(lattice);
  const auto& js = data.irreducibles();
  const FinLattice& L = data.lattice();

  InvariantResult transitivity{"d-transitivity", true, true, {}, "a D b D c, a != c => a D c"};
  for (Elem a : js)
    for (Elem b : data.rd(a))
      for (Elem c : data.rd(b))
        if (a != c && !data.depends(a, c)) fail(transitivity, {a, b, c});

  InvariantResult antichain{"rd-antichain", true, true, {}, "rd(p) is an antichain"};
  for (Elem p : js)
    for (Elem x : data.rd(p))
      for (Elem y : data.rd(p))
        if (x != y && L.leq(x, y)) fail(antichain, {p, x, y});

  InvariantResult min_ub{"min-ub", true, true, {},
                         "x, y in rd(p), p <= x v y => minimal in x and y"};
  for (Elem p : js)
    for (Elem x : data.rd(p))
      for (Elem y : data.rd(p))
        if (x < y && L.leq(p, L.join(x, y)) && !is_minimal_pair_cover(L, p, x, y))
          fail(min_ub, {p, x, y});

  InvariantResult min2{"min-2-track", true, true, {},
                       "x, y, u in rd(a), x != y, a <= u v x, u v y, x <= a v y => "
                       "x <= u v y minimal"};
  for (Elem a : js) {
    const auto& rd = data.rd(a);
    for (Elem u : rd)
      for (Elem x : rd)
        for (Elem y : rd) {
          if (x == y) continue;
          if (!L.leq(a, L.join(u, x)) || !L.leq(a, L.join(u, y))) continue;
          if (!L.leq(x, L.join(a, y))) continue;
          if (!is_minimal_pair_cover(L, x, u, y)) fail(min2, {a, x, y, u});
        }
  }

  InvariantResult ivp{"interval-property", options.check_interval_property, true, {},
                      "x <= a v b_i minimal, a v b0 <= a v b1 <= a v b2 => strict and "
                      "b1 <= b0 v b2"};
  if (ivp.applicable) {
    for (Elem a : js)
      for (Elem x : js) {
        std::vector<Elem> bs;
        for (Elem b : js)
          if (is_minimal_pair_cover(L, x, a, b)) bs.push_back(b);
        for (Elem b0 : bs)
          for (Elem b1 : bs)
            for (Elem b2 : bs) {
              if (b0 == b1 || b1 == b2 || b0 == b2) continue;
              const Elem j0 = L.join(a, b0), j1 = L.join(a, b1), j2 = L.join(a, b2);
              if (!L.leq(j0, j1) || !L.leq(j1, j2)) continue;
              if (j0 == j1 || j1 == j2 || !L.leq(b1, L.join(b0, b2)))
                fail(ivp, {a, x, b0, b1, b2});
            }
      }
  } else {
    ivp.note += " (not applicable: needs join-semidistributivity and (E))";
  }

  DependencyReport report;
  report.results = {transitivity, antichain, min_ub, min2, ivp};
  return report;
}

}  // namespace colat
