#include "colat/catalog.hpp"

#include <algorithm>

#include "colat/congruence.hpp"
#include "colat/error.hpp"
#include "colat/membership.hpp"
#include "colat/parallel.hpp"

namespace colat {

CoLattice co_chain(std::size_t n) {
  if (n < 1) throw InputError("co_chain needs n >= 1");
  return co_lattice(Poset::chain(n));
}

CoLattice l_mn(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("l_mn needs m, n >= 1");
  const CoLattice co = co_chain(m + n + 1);
  std::vector<Elem> kept;
  std::vector<ConvexSet> sets;
  for (std::size_t i = 0; i < co.sets.size(); ++i) {
    const ConvexSet& s = co.sets[i];
    if (s.contains(m) && !s.contains(m - 1)) continue;
    kept.push_back(static_cast<Elem>(i));
    sets.push_back(s);
  }
  return CoLattice{sublattice(co.lattice, kept), std::move(sets)};
}

Elem l_mn_singleton(const CoLattice& lmn, std::size_t i) {
  auto idx = lmn.index_of(bit(i));
  if (!idx) throw InputError("{" + std::to_string(i) + "} is not an element of this lattice");
  return *idx;
}

Elem l_mn_cm(const CoLattice& lmn, std::size_t m) {
  if (m < 1) throw InputError("c_m needs m >= 1");
  auto idx = lmn.index_of(bit(m - 1) | bit(m));
  if (!idx) throw InputError("c_m is not an element of this lattice");
  return *idx;
}

FinLattice diamond_m3() {
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {0, 2}, {0, 3},
                                                               {1, 4}, {2, 4}, {3, 4}};
  return FinLattice::from_pairs(5, pairs, {"0", "a", "b", "c", "1"});
}

FinLattice pentagon_n5() {
  // 0 < a < b < 1, 0 < c < 1
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 2}, {2, 4},
                                                               {0, 3}, {3, 4}};
  return FinLattice::from_pairs(5, pairs, {"0", "a", "b", "c", "1"});
}

FinLattice boolean_lattice(std::size_t k) {
  if (k > 10) throw SizeGuardError("boolean_lattice is limited to k <= 10");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < k; ++b)
      if (!((x >> b) & 1u)) pairs.emplace_back(x, x | (std::size_t{1} << b));
  return FinLattice::from_pairs(n, pairs);
}

WeakBiTrack canonical_bitrack(std::size_t m, std::size_t n) {
  const CoLattice lmn = l_mn(m, n);
  WeakBiTrack track;
  const Elem cm = l_mn_cm(lmn, m);
  track.sigma.entries.push_back(cm);
  for (std::size_t i = m; i-- > 0;) track.sigma.entries.push_back(l_mn_singleton(lmn, i));
  track.sigma.side = l_mn_singleton(lmn, m + n);
  track.tau.entries.push_back(cm);
  for (std::size_t i = m + 1; i <= m + n; ++i)
    track.tau.entries.push_back(l_mn_singleton(lmn, i));
  track.tau.side = l_mn_singleton(lmn, 0);
  if (!is_weak_bitrack(lmn.lattice, track))
    throw IntegrityError("canonical bi-track of L(" + std::to_string(m) + "," +
                         std::to_string(n) + ") fails validation");
  return track;
}

std::string SIClass::to_string() const {
  switch (kind) {
    case Kind::co_chain:
      return "CoChain(" + std::to_string(m) + ")";
    case Kind::lmn:
      return "Lmn(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::not_si:
      return "NotSI";
    case Kind::not_member:
      return "NotMember";
  }
  return "?";
}

namespace {

struct Candidate {
  SIClass::Kind kind;
  std::size_t m, n;
  FinLattice lattice;
};

// Catalog lattices with exactly k join-irreducibles.
std::vector<Candidate> candidates_with_irreducibles(std::size_t k) {
  std::vector<Candidate> out;
  if (k >= 1) out.push_back({SIClass::Kind::co_chain, k, 0, co_chain(k).lattice});
  for (std::size_t m = 1; m + 1 < k; ++m)
    out.push_back({SIClass::Kind::lmn, m, k - 1 - m, l_mn(m, k - 1 - m).lattice});
  return out;
}

}  // namespace

SIClass classify_si(const FinLattice& lattice, unsigned workers) {
  SIClass result;
  if (!decide_sub_lo(lattice, workers).accepted) return result;
  if (lattice.size() < 2 || !monolith(lattice)) {
    result.kind = SIClass::Kind::not_si;
    return result;
  }
  const std::size_t k = join_irreducibles(lattice).size();
  const auto candidates = candidates_with_irreducibles(k);
  std::vector<std::optional<LatticeMap>> isos(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    if (candidates[i].lattice.size() == lattice.size())
      isos[i] = find_isomorphism(candidates[i].lattice, lattice);
  });
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (isos[i]) {
      result.kind = candidates[i].kind;
      result.m = candidates[i].m;
      result.n = candidates[i].n;
      result.isomorphism = std::move(isos[i]);
      return result;
    }
  throw IntegrityError("subdirectly irreducible member with " + std::to_string(k) +
                       " join-irreducibles matches no catalog lattice");
}

VarietyPosition variety_position(const FinLattice& lattice, unsigned workers) {
  if (!decide_sub_lo(lattice, workers).accepted)
    throw PreconditionError("lattice is not in SUB(LO)");
  VarietyPosition pos;
  if (lattice.size() == 1) return pos;
  // SUB(1) = SUB(2), so distributive lattices report 2.
  pos.least_n = std::max<std::size_t>(2, max_ja_size(lattice));

  std::vector<SIClass> catalog;
  std::vector<FinLattice> lattices;
  for (std::size_t k = 1; k <= pos.least_n; ++k) {
    FinLattice co = co_chain(k).lattice;
    if (!subdirectly_irreducible(co)) continue;
    catalog.push_back({SIClass::Kind::co_chain, k, 0, std::nullopt});
    lattices.push_back(std::move(co));
  }
  for (std::size_t s = 2; s < pos.least_n; ++s)
    for (std::size_t m = 1; m < s; ++m) {
      catalog.push_back({SIClass::Kind::lmn, m, s - m, std::nullopt});
      lattices.push_back(l_mn(m, s - m).lattice);
    }
  std::vector<std::uint8_t> embeds(catalog.size(), 0);
  parallel_for(catalog.size(), workers, [&](std::size_t i) {
    embeds[i] = lattices[i].size() <= lattice.size() &&
                find_embedding(lattices[i], lattice).has_value();
  });
  for (std::size_t i = 0; i < catalog.size(); ++i)
    if (embeds[i]) pos.embedded_si.push_back(catalog[i].to_string());
  return pos;
}

}  // namespace colat
