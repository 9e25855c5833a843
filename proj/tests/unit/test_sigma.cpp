#include <doctest.h>

#include <array>

#include "colat/builtin.hpp"
#include "colat/catalog.hpp"
#include "colat/error.hpp"
#include "colat/identity_check.hpp"
#include "colat/sigma.hpp"
#include "oracles.hpp"
#include "shared.hpp"

using namespace colat;

namespace {

// The three conditions again, with minimal covers taken from the
// refinement oracle rather than the library.
struct SigmaOracle {
  const FinLattice& L;
  std::vector<Elem> js = oracle::join_irreducibles(L);
  std::vector<std::vector<std::vector<Elem>>> covers;

  explicit SigmaOracle(const FinLattice& lattice) : L(lattice) {
    covers.resize(L.size());
    for (Elem p : js) covers[p] = oracle::min_covers(L, p);
  }

  bool min_pair(Elem p, Elem x, Elem y) const {
    std::vector<Elem> pair{std::min(x, y), std::max(x, y)};
    if (x == y) return false;
    return std::find(covers[p].begin(), covers[p].end(), pair) != covers[p].end();
  }

  bool below_join(Elem p, Elem x, Elem y) const { return L.leq(p, L.join(x, y)); }

  bool e() const {
    const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (Elem x : js)
      for (Elem a : js)
        for (Elem b0 : js)
          for (Elem b1 : js)
            for (Elem b2 : js) {
              const std::array<Elem, 3> b{b0, b1, b2};
              if (!min_pair(x, a, b0) || !min_pair(x, a, b1) || !min_pair(x, a, b2)) continue;
              bool ok = false;
              for (const auto& s : perms)
                ok = ok || (L.leq(b[s[0]], L.join(x, b[s[1]])) &&
                            L.leq(L.join(x, b[s[1]]), L.join(x, b[s[2]])) &&
                            L.leq(b[s[1]], L.join(b[s[0]], b[s[2]])));
              if (!ok) return false;
            }
    return true;
  }

  bool p() const {
    for (Elem a : js)
      for (Elem b : js)
        for (Elem c : js)
          for (Elem d : js)
            for (Elem b0 : js)
              for (Elem b1 : js) {
                if (!min_pair(a, b, c) || !min_pair(a, c, d) || !below_join(b, b0, b1)) continue;
                bool ok = below_join(b, a, d);
                for (Elem bi : {b0, b1})
                  ok = ok || (below_join(a, bi, c) && below_join(b, a, bi) && below_join(b, bi, d));
                if (!ok) return false;
              }
    return true;
  }

  bool hs() const {
    for (Elem a : js)
      for (Elem b : js)
        for (Elem c : js)
          for (Elem b0 : js)
            for (Elem b1 : js) {
              if (a == b) continue;
              // Minimal in b: no strictly smaller element of the lattice
              // replaces b.
              bool minimal = below_join(a, b, c);
              for (Elem z = 0; z < L.size() && minimal; ++z)
                if (L.lt(z, b) && below_join(a, z, c)) minimal = false;
              if (!minimal) continue;
              if (!below_join(b, b0, b1) || L.leq(b, b0) || L.leq(b, b1)) continue;
              bool ok = false;
              for (int i = 0; i < 2; ++i) {
                const Elem bi = i == 0 ? b0 : b1, other = i == 0 ? b1 : b0;
                if (!below_join(b, a, bi)) continue;
                ok = ok || (below_join(a, bi, c) && below_join(a, b, other)) ||
                     (below_join(a, b0, c) && below_join(a, b1, c));
              }
              if (!ok) return false;
            }
    return true;
  }
};

}  // namespace

TEST_SUITE("sigma") {
  TEST_CASE("chains satisfy all three interpretations") {
    const FinLattice co5 = co_chain(5).lattice;
    for (auto c : {SigmaCondition::E, SigmaCondition::P, SigmaCondition::HS})
      CHECK(check_sigma(co5, c).holds);
  }

  TEST_CASE("M3 fails HS sigma") {
    const FinLattice m3 = diamond_m3();
    const SigmaResult r = check_sigma(m3, SigmaCondition::HS);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    const auto& w = *r.witness;
    CHECK(r.roles == std::vector<std::string>{"a", "b", "c", "b0", "b1"});
    CHECK(minimal_in_first(m3, w[0], w[1], w[2]));
    CHECK(m3.leq(w[1], m3.join(w[3], w[4])));
  }

  TEST_CASE("no covers means vacuous truth") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (auto c : {SigmaCondition::E, SigmaCondition::P, SigmaCondition::HS})
        CHECK(check_sigma(boolean_lattice(n), c).holds);
  }

  TEST_CASE("agrees with the definition-level oracle") {
    for (const auto& [name, L] : corpus_up_to(7)) {
      CAPTURE(name);
      const SigmaOracle o(L);
      CHECK(check_sigma(L, SigmaCondition::E).holds == o.e());
      CHECK(check_sigma(L, SigmaCondition::P).holds == o.p());
      CHECK(check_sigma(L, SigmaCondition::HS).holds == o.hs());
    }
  }

  TEST_CASE("identity implies its interpretation") {
    for (const auto& [name, L] : corpus_up_to(6)) {
      CAPTURE(name);
      for (auto c : {SigmaCondition::E, SigmaCondition::P, SigmaCondition::HS})
        if (check_identity(L, builtin_identity(to_string(c))).holds)
          CHECK(check_sigma(L, c).holds);
    }
  }

  TEST_CASE("parsing condition names") {
    CHECK(parse_sigma_condition("HS") == SigmaCondition::HS);
    CHECK_THROWS_AS(parse_sigma_condition("S"), InputError);
  }
}
