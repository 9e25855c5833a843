#include <doctest.h>

#include <bit>
#include <map>

#include "colat/catalog.hpp"
#include "colat/congruence.hpp"
#include "colat/error.hpp"
#include "colat/homomorphism.hpp"
#include "oracles.hpp"

using namespace colat;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> indices(std::size_t max_sum) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 2; s <= max_sum; ++s)
    for (std::size_t m = 1; m < s; ++m) out.emplace_back(m, s - m);
  return out;
}

// Intervals [lo, hi] of the k-chain plus the empty set, filtered by
// "m in X implies m-1 in X".
std::size_t filtered_interval_count(std::size_t m, std::size_t n) {
  const std::size_t k = m + n + 1;
  std::size_t count = 1;
  for (std::size_t lo = 0; lo < k; ++lo)
    for (std::size_t hi = lo; hi < k; ++hi)
      if (!(lo <= m && m <= hi) || lo <= m - 1) ++count;
  return count;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("small sizes") {
    CHECK(co_chain(3).lattice.size() == 7);
    CHECK(co_chain(4).lattice.size() == 11);
    CHECK(co_chain(5).lattice.size() == 16);
    CHECK(co_chain(6).lattice.size() == 22);
    for (auto [m, n] : indices(5)) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(l_mn(m, n).lattice.size() == filtered_interval_count(m, n));
    }
    CHECK(boolean_lattice(3).size() == 8);
    CHECK_THROWS_AS(boolean_lattice(11), SizeGuardError);
    CHECK_THROWS_AS(l_mn(0, 2), InputError);
  }

  TEST_CASE("L(m,n) is a bounded sublattice of Co") {
    for (auto [m, n] : indices(5)) {
      const CoLattice l = l_mn(m, n);
      const CoLattice co = co_chain(m + n + 1);
      std::map<Mask, Elem> in_co;
      for (Elem e = 0; e < co.lattice.size(); ++e) in_co[co.sets[e].members] = e;
      CHECK(l.sets[l.lattice.bottom()].members == 0);
      CHECK(l.sets[l.lattice.top()].members == co.sets[co.lattice.top()].members);
      for (Elem x = 0; x < l.lattice.size(); ++x)
        for (Elem y = 0; y < l.lattice.size(); ++y) {
          const Elem cx = in_co.at(l.sets[x].members), cy = in_co.at(l.sets[y].members);
          CHECK(l.sets[l.lattice.join(x, y)].members == co.sets[co.lattice.join(cx, cy)].members);
          CHECK(l.sets[l.lattice.meet(x, y)].members == co.sets[co.lattice.meet(cx, cy)].members);
        }
    }
  }

  TEST_CASE("join-irreducibles are the singletons and c_m") {
    for (auto [m, n] : indices(5)) {
      const CoLattice l = l_mn(m, n);
      std::vector<Mask> expected;
      for (std::size_t i = 0; i <= m + n; ++i)
        expected.push_back(i == m ? (bit(m - 1) | bit(m)) : bit(i));
      std::sort(expected.begin(), expected.end());
      std::vector<Mask> got;
      for (Elem j : oracle::join_irreducibles(l.lattice)) got.push_back(l.sets[j].members);
      std::sort(got.begin(), got.end());
      CHECK(got == expected);
      CHECK(join_irreducibles(l.lattice).size() == m + n + 1);
      CHECK(l.sets[l_mn_cm(l, m)].members == (bit(m - 1) | bit(m)));
      CHECK_THROWS(l_mn_singleton(l, m));
    }
  }

  TEST_CASE("monolith collapses {m-1} with c_m") {
    for (auto [m, n] : indices(5)) {
      const CoLattice l = l_mn(m, n);
      const auto mono = monolith(l.lattice);
      REQUIRE(mono);
      CHECK(mono->same(l_mn_singleton(l, m - 1), l_mn_cm(l, m)));
      // Least nonzero congruence generated by that pair.
      const Congruence generated =
          principal_congruence(l.lattice, l_mn_singleton(l, m - 1), l_mn_cm(l, m));
      for (Elem x = 0; x < l.lattice.size(); ++x)
        for (Elem y = 0; y < l.lattice.size(); ++y) CHECK(mono->same(x, y) == generated.same(x, y));
    }
  }

  TEST_CASE("canonical bi-tracks") {
    for (auto [m, n] : indices(5)) {
      const CoLattice l = l_mn(m, n);
      const WeakBiTrack t = canonical_bitrack(m, n);
      CHECK(is_weak_bitrack(l.lattice, t));
      CHECK(t.sigma.length() == m);
      CHECK(t.tau.length() == n);
      CHECK(t.sigma.side == l_mn_singleton(l, m + n));
      CHECK(t.tau.side == l_mn_singleton(l, 0));
      const TrackEmbedding e = track_to_embedding(l.lattice, t);
      CHECK(e.source.lattice.size() == co_chain(m + n).lattice.size());
      CHECK(preserves_operations(e.source.lattice, l.lattice, e.map));
      CHECK(is_injective(e.map));
    }
  }

  TEST_CASE("equal index sums give mutually non-embeddable lattices") {
    for (std::size_t s = 2; s <= 5; ++s) {
      std::size_t classes = 0;
      for (std::size_t k = 1; k < s; ++k) {
        ++classes;
        for (std::size_t k2 = 1; k2 < s; ++k2) {
          if (k == k2) continue;
          CHECK_FALSE(find_embedding(l_mn(k, s - k).lattice, l_mn(k2, s - k2).lattice));
        }
      }
      CHECK(classes == s - 1);
    }
  }

  TEST_CASE("named lattices") {
    CHECK(diamond_m3().size() == 5);
    CHECK_FALSE(oracle::distributive(diamond_m3()));
    CHECK_FALSE(oracle::join_semidistributive(diamond_m3()));
    CHECK(oracle::join_semidistributive(pentagon_n5()));
    CHECK(oracle::distributive(boolean_lattice(3)));
    CHECK(diamond_m3().find("a").has_value());
  }

  TEST_CASE("classification") {
    CHECK(classify_si(diamond_m3()).kind == SIClass::Kind::not_member);
    CHECK(classify_si(boolean_lattice(2)).kind == SIClass::Kind::not_si);
    CHECK(classify_si(co_chain(2).lattice).kind == SIClass::Kind::not_si);
    const SIClass n5 = classify_si(pentagon_n5());
    CHECK(n5.to_string() == "Lmn(1,1)");
    REQUIRE(n5.isomorphism);
    CHECK(preserves_operations(l_mn(1, 1).lattice, pentagon_n5(), *n5.isomorphism));
    CHECK(is_injective(*n5.isomorphism));
    CHECK(classify_si(FinLattice::chain(2)).to_string() == "CoChain(1)");
    for (std::size_t n = 3; n <= 6; ++n)
      CHECK(classify_si(co_chain(n).lattice).to_string() == "CoChain(" + std::to_string(n) + ")");
    for (auto [m, n] : indices(5))
      CHECK(classify_si(l_mn(m, n).lattice).to_string() ==
            "Lmn(" + std::to_string(m) + "," + std::to_string(n) + ")");
  }

  TEST_CASE("variety position") {
    CHECK(variety_position(FinLattice::chain(1)).least_n == 0);
    CHECK(variety_position(boolean_lattice(2)).least_n == 2);
    CHECK(variety_position(FinLattice::chain(2)).least_n == 2);
    // V(L_{k,l}) lies in SUB(k+l+1) and not in SUB(k+l).
    for (auto [m, n] : indices(4)) CHECK(variety_position(l_mn(m, n).lattice).least_n == m + n + 1);
    for (std::size_t n = 3; n <= 5; ++n) CHECK(variety_position(co_chain(n).lattice).least_n == n);
    const auto l12 = variety_position(l_mn(1, 2).lattice);
    CHECK(std::find(l12.embedded_si.begin(), l12.embedded_si.end(), "Lmn(1,1)") !=
          l12.embedded_si.end());
    CHECK(std::find(l12.embedded_si.begin(), l12.embedded_si.end(), "CoChain(3)") !=
          l12.embedded_si.end());
    CHECK_THROWS_AS(variety_position(diamond_m3()), PreconditionError);
  }
}
