#include <doctest.h>

#include <bit>
#include <functional>

#include "colat/error.hpp"
#include "colat/poset.hpp"
#include "oracles.hpp"

using namespace colat;

namespace {

Poset two_antichain() { return Poset::antichain(2); }

// A few small posets of different shapes for exhaustive checks.
std::vector<Poset> sample_posets() {
  std::vector<Poset> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(Poset::chain(n));
  out.push_back(Poset::antichain(3));
  const std::vector<std::pair<std::size_t, std::size_t>> crown{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  out.push_back(Poset::from_covers({"a", "b", "c", "d"}, crown));
  const std::vector<std::pair<std::size_t, std::size_t>> vee{{0, 1}, {0, 2}, {2, 3}, {4, 3}};
  out.push_back(Poset::from_covers({"p", "q", "r", "s", "t"}, vee));
  return out;
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("convexity in a chain") {
    const Poset c3 = Poset::chain(3);
    CHECK_FALSE(is_convex(c3, bit(0) | bit(2)));
    CHECK(is_convex(c3, bit(0) | bit(1)));
    for (Mask s = 0; s < 4; ++s) CHECK(is_convex(two_antichain(), s));
    CHECK_THROWS_AS(is_convex(c3, bit(5)), InputError);
  }

  TEST_CASE("convexity agrees with the definition") {
    for (const Poset& P : sample_posets())
      for (Mask s = 0; s < (Mask{1} << P.size()); ++s)
        CHECK(is_convex(P, s) == oracle::is_convex(P, s));
  }

  TEST_CASE("hull examples") {
    CHECK(convex_hull(Poset::chain(3), bit(0) | bit(2)).members == 0b111);
    CHECK(convex_hull(two_antichain(), 0b11).members == 0b11);
    CHECK_THROWS_AS(convex_hull(Poset::chain(3), bit(3)), InputError);
  }

  TEST_CASE("hull is the least convex superset and is idempotent") {
    for (const Poset& P : sample_posets())
      for (Mask s = 0; s < (Mask{1} << P.size()); ++s) {
        const Mask h = convex_hull(P, s).members;
        CHECK((h & s) == s);
        CHECK(oracle::is_convex(P, h));
        CHECK(convex_hull(P, h).members == h);
        for (Mask t = 0; t < (Mask{1} << P.size()); ++t)
          if ((t & s) == s && oracle::is_convex(P, t)) CHECK((h & t) == h);
      }
  }

  TEST_CASE("hull of a union") {
    const Poset P = sample_posets().back();
    for (Mask s = 0; s < (Mask{1} << P.size()); ++s)
      for (Mask t = 0; t < (Mask{1} << P.size()); ++t)
        CHECK(convex_hull(P, s | t).members ==
              convex_hull(P, convex_hull(P, s).members | convex_hull(P, t).members).members);
  }

  TEST_CASE("co_lattice sizes") {
    CHECK(co_lattice(Poset::chain(3)).lattice.size() == 7);
    CHECK(co_lattice(Poset::chain(4)).lattice.size() == 11);
    const CoLattice anti = co_lattice(two_antichain());
    CHECK(anti.lattice.size() == 4);
    CHECK(oracle::distributive(anti.lattice));
    for (const Poset& P : sample_posets())
      CHECK(co_lattice(P).lattice.size() == oracle::convex_count(P));
  }

  TEST_CASE("co_lattice operations are intersection and hull") {
    for (const Poset& P : sample_posets()) {
      const CoLattice co = co_lattice(P);
      const FinLattice& L = co.lattice;
      CHECK(co.sets[L.bottom()].members == 0);
      CHECK(co.sets[L.top()].members == P.all());
      CHECK(co.sets[0].members == 0);
      for (std::size_t i = 0; i < P.size(); ++i) CHECK(co.sets[i + 1].members == bit(i));
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y) {
          const Mask a = co.sets[x].members, b = co.sets[y].members;
          CHECK(L.leq(x, y) == ((a & b) == a));
          CHECK(co.sets[L.meet(x, y)].members == (a & b));
          CHECK(co.sets[L.join(x, y)].members == convex_hull(P, a | b).members);
        }
    }
  }

  TEST_CASE("duality leaves the convex sets unchanged") {
    for (const Poset& P : sample_posets()) {
      const Poset D = dual_poset(P);
      for (std::size_t x = 0; x < P.size(); ++x)
        for (std::size_t y = 0; y < P.size(); ++y) CHECK(D.leq(x, y) == P.leq(y, x));
      CHECK(dual_poset(D) == P);
      std::vector<Mask> a, b;
      for (const auto& s : co_lattice(P).sets) a.push_back(s.members);
      for (const auto& s : co_lattice(D).sets) b.push_back(s.members);
      CHECK(a == b);
    }
    CHECK(dual_poset(Poset::antichain(3)) == Poset::antichain(3));
  }

  TEST_CASE("chain intervals") {
    // Pairwise disjoint nonempty convex A_0..A_{n-1} of a chain with
    // A_k inside A_i v A_j for i < k < j are consecutive, in one direction.
    for (std::size_t t = 1; t <= 6; ++t) {
      const Poset T = Poset::chain(t);
      std::vector<Mask> intervals;
      for (Mask s = 1; s < (Mask{1} << t); ++s)
        if (is_convex(T, s)) intervals.push_back(s);
      for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::size_t> pick(n, 0);
        std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask used) {
          if (i == n) {
            for (std::size_t a = 0; a < n; ++a)
              for (std::size_t k = a + 1; k < n; ++k)
                for (std::size_t b = k + 1; b < n; ++b) {
                  const Mask hull = convex_hull(T, intervals[pick[a]] | intervals[pick[b]]).members;
                  if ((intervals[pick[k]] & ~hull) != 0) return;
                }
            auto lo = [&](std::size_t i2) { return std::countr_zero(intervals[pick[i2]]); };
            bool up = true, down = true;
            for (std::size_t k = 0; k + 1 < n; ++k) {
              up = up && lo(k) < lo(k + 1);
              down = down && lo(k) > lo(k + 1);
            }
            CHECK((up || down));
            return;
          }
          for (std::size_t c = 0; c < intervals.size(); ++c) {
            if (intervals[c] & used) continue;
            pick[i] = c;
            rec(i + 1, used | intervals[c]);
          }
        };
        rec(0, 0);
      }
    }
  }

  TEST_CASE("poset input validation") {
    const std::vector<std::pair<std::size_t, std::size_t>> cycle{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Poset::from_covers({"x", "y"}, cycle), InputError);
    const std::vector<std::pair<std::size_t, std::size_t>> none;
    CHECK_THROWS_AS(Poset::from_covers({"x", "x"}, none), InputError);
  }
}
