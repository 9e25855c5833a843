#include <doctest.h>

#include "colat/catalog.hpp"
#include "colat/congruence.hpp"
#include "colat/error.hpp"
#include "colat/homomorphism.hpp"
#include "colat/lattice.hpp"
#include "oracles.hpp"
#include "shared.hpp"

using namespace colat;

namespace {

bool brute_hom(const FinLattice& K, const FinLattice& L, const std::vector<Elem>& h) {
  for (Elem x = 0; x < K.size(); ++x)
    for (Elem y = 0; y < K.size(); ++y)
      if (h[K.join(x, y)] != L.join(h[x], h[y]) || h[K.meet(x, y)] != L.meet(h[x], h[y]))
        return false;
  return true;
}

// Every map K -> L, odometer order.
template <class F>
void for_each_map(const FinLattice& K, const FinLattice& L, F&& f) {
  std::vector<Elem> h(K.size(), 0);
  for (;;) {
    f(h);
    std::size_t i = 0;
    while (i < h.size() && ++h[i] == L.size()) h[i++] = 0;
    if (i == h.size()) return;
  }
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("tables satisfy the lattice laws") {
    for (const auto& [name, L] : corpus_up_to(7)) {
      CAPTURE(name);
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y) {
          CHECK(L.join(x, y) == L.join(y, x));
          CHECK(L.join(x, L.meet(x, y)) == x);
          CHECK(L.leq(x, y) == (L.join(x, y) == y));
          CHECK(L.leq(x, y) == (L.meet(x, y) == x));
        }
    }
  }

  TEST_CASE("join-irreducibles") {
    CHECK(join_irreducibles(co_chain(3).lattice) == std::vector<Elem>{1, 2, 3});
    CHECK(join_irreducibles(boolean_lattice(2)) == std::vector<Elem>{1, 2});
    CHECK(join_irreducibles(FinLattice::chain(5)).size() == 4);
    for (const auto& [name, L] : corpus()) {
      CAPTURE(name);
      const auto js = join_irreducibles(L);
      CHECK(js == oracle::join_irreducibles(L));
      for (Elem j : js) CHECK(lower_cover_of_irreducible(L, j) == oracle::lower_cover(L, j));
      // x is the join of the join-irreducibles below it.
      for (Elem x = 0; x < L.size(); ++x) {
        Elem r = L.bottom();
        for (Elem j : js)
          if (L.leq(j, x)) r = L.join(r, j);
        CHECK(r == x);
      }
    }
    CHECK_THROWS_AS(lower_cover_of_irreducible(boolean_lattice(2), 3), PreconditionError);
  }

  TEST_CASE("structural predicates") {
    CHECK_FALSE(structural_predicates(diamond_m3()).join_semidistributive);
    CHECK(structural_predicates(pentagon_n5()).join_semidistributive);
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto p = structural_predicates(FinLattice::chain(n));
      CHECK(p.distributive);
      CHECK(p.join_semidistributive);
      CHECK(p.dual_2_distributive);
    }
    for (const auto& [name, L] : corpus()) {
      CAPTURE(name);
      const auto p = structural_predicates(L);
      CHECK(p.distributive == oracle::distributive(L));
      CHECK(p.join_semidistributive == oracle::join_semidistributive(L));
      bool d2 = true;
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem a = 0; a < L.size(); ++a)
          for (Elem b = 0; b < L.size(); ++b)
            for (Elem c = 0; c < L.size(); ++c) {
              const Elem lhs = L.meet(x, L.join(a, L.join(b, c)));
              const Elem rhs = L.join(L.meet(x, L.join(a, b)),
                                      L.join(L.meet(x, L.join(a, c)), L.meet(x, L.join(b, c))));
              d2 = d2 && lhs == rhs;
            }
      CHECK(p.dual_2_distributive == d2);
    }
  }

  TEST_CASE("monolith examples") {
    const CoLattice l11 = l_mn(1, 1);
    const auto mono = monolith(l11.lattice);
    REQUIRE(mono);
    CHECK(mono->same(l_mn_singleton(l11, 0), l_mn_cm(l11, 1)));
    CHECK(mono->block_count() == l11.lattice.size() - 1);
    const auto two = monolith(FinLattice::chain(2));
    REQUIRE(two);
    CHECK(two->block_count() == 1);
    CHECK_FALSE(monolith(boolean_lattice(2)));
    CHECK_THROWS_AS(monolith(FinLattice::chain(1)), PreconditionError);
  }

  TEST_CASE("monolith agrees with congruence enumeration") {
    std::vector<FinLattice> lattices;
    for (const auto& [name, L] : corpus())
      if (L.size() >= 2 && L.size() <= 12) lattices.push_back(L);
    for (const FinLattice& L : lattices) {
      const auto expected = oracle::monolith(L);
      const auto got = monolith(L);
      REQUIRE(got.has_value() == expected.has_value());
      if (!got) continue;
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y)
          CHECK(got->same(x, y) == ((*expected)[x] == (*expected)[y]));
    }
  }

  TEST_CASE("principal congruences are congruences") {
    for (const auto& [name, L] : corpus_up_to(6))
      for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
          const Congruence c = principal_congruence(L, a, b);
          std::vector<int> block(L.size());
          for (Elem x = 0; x < L.size(); ++x) block[x] = static_cast<int>(c.block_of(x));
          CHECK(oracle::compatible(L, block));
          CHECK(c.same(a, b));
        }
  }

  TEST_CASE("embedding search") {
    const FinLattice co2 = co_chain(2).lattice, co3 = co_chain(3).lattice;
    const auto e = find_embedding(co2, co3);
    REQUIRE(e);
    CHECK(preserves_operations(co2, co3, *e));
    CHECK(is_injective(*e));
    CHECK_FALSE(find_embedding(diamond_m3(), co_chain(5).lattice));
    for (const auto& [name, L] : corpus_up_to(6)) CHECK(find_embedding(L, L).has_value());
  }

  TEST_CASE("embedding search agrees with brute force") {
    const std::vector<std::pair<FinLattice, FinLattice>> cases{
        {co_chain(2).lattice, co_chain(3).lattice},
        {pentagon_n5(), co_chain(3).lattice},
        {diamond_m3(), co_chain(3).lattice},
        {boolean_lattice(2), pentagon_n5()},
        {FinLattice::chain(3), diamond_m3()},
    };
    for (const auto& [K, L] : cases) {
      bool exists = false;
      std::size_t homs = 0;
      for_each_map(K, L, [&](const std::vector<Elem>& h) {
        if (!brute_hom(K, L, h)) return;
        ++homs;
        std::vector<Elem> sorted = h;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) exists = true;
      });
      CHECK(find_embedding(K, L).has_value() == exists);
      std::size_t counted = 0;
      for_each_homomorphism(K, L, {}, [&](const LatticeMap& m) {
        CHECK(brute_hom(K, L, m.values));
        ++counted;
        return true;
      });
      CHECK(counted == homs);
    }
  }

  TEST_CASE("products and surjections") {
    const FinLattice c3 = co_chain(3).lattice, c2 = co_chain(2).lattice;
    const FinLattice p = direct_product(c3, c2);
    CHECK(p.size() == 28);
    const LatticeMap pi = first_projection(c3, c2);
    CHECK(preserves_operations(p, c3, pi));
    CHECK(is_surjective(pi, c3.size()));
    CHECK(preserves_operations(p, c2, second_projection(c3, c2)));
    CHECK(surjections(FinLattice::chain(2), FinLattice::chain(3)).empty());
    // Onto a subdirectly irreducible factor only the two projections, each
    // twisted by the two automorphisms of Co(3).
    const auto s = surjections(direct_product(c3, c3), c3);
    CHECK(s.size() == 4);
    CHECK(surjections(direct_product(c3, c3), c3, 3).size() == 3);
    for (const auto& m : s) {
      CHECK(preserves_operations(direct_product(c3, c3), c3, m));
      CHECK(is_surjective(m, c3.size()));
    }
  }

  TEST_CASE("isomorphism") {
    CHECK(isomorphic(pentagon_n5(), l_mn(1, 1).lattice));
    CHECK_FALSE(isomorphic(pentagon_n5(), diamond_m3()));
    CHECK(isomorphic(boolean_lattice(2), co_chain(2).lattice));
  }

  TEST_CASE("input validation") {
    const std::vector<std::pair<std::size_t, std::size_t>> no_join{{0, 2}, {1, 2}, {0, 3}, {1, 3}};
    CHECK_THROWS_AS(FinLattice::from_pairs(4, no_join), InputError);
    const std::vector<std::pair<std::size_t, std::size_t>> cycle{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(FinLattice::from_pairs(2, cycle), InputError);
  }
}
