#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "colat/builtin.hpp"
#include "colat/catalog.hpp"
#include "colat/error.hpp"
#include "colat/json_io.hpp"
#include "colat/membership.hpp"

using namespace colat;

TEST_SUITE("json") {
  TEST_CASE("poset round trip") {
    const std::vector<std::pair<std::size_t, std::size_t>> covers{{0, 1}, {0, 2}, {2, 3}};
    const Poset p = Poset::from_covers({"w", "x", "y", "z"}, covers);
    const Json j = poset_to_json(p);
    CHECK(j["elements"] == Json::array({"w", "x", "y", "z"}));
    CHECK(poset_from_json(j) == p);
  }

  TEST_CASE("lattice round trip") {
    for (const FinLattice& L : {diamond_m3(), l_mn(1, 2).lattice, co_chain(3).lattice}) {
      const FinLattice back = lattice_from_json(lattice_to_json(L));
      CHECK(back.size() == L.size());
      for (Elem x = 0; x < L.size(); ++x)
        for (Elem y = 0; y < L.size(); ++y) CHECK(back.leq(x, y) == L.leq(x, y));
      CHECK(back.labels() == L.labels());
    }
  }

  TEST_CASE("lattice input accepts any generating pairs") {
    const Json j = Json::parse(R"j({"size": 3, "leq_pairs": [[0, 1], [1, 2], [0, 2]]})j");
    const FinLattice L = lattice_from_json(j);
    CHECK(L.leq(0, 2));
    CHECK(L.top() == 2);
  }

  TEST_CASE("identity round trip and placeholders") {
    for (const std::string& name : builtin_names()) {
      const Identity id = builtin_identity(name);
      const Identity back = identity_from_json(identity_to_json(id));
      CHECK(back.name == id.name);
      CHECK(back.variables == id.variables);
      CHECK(back.relation == id.relation);
      CHECK(back.lhs == id.lhs);
      CHECK(back.rhs == id.rhs);
    }
    const Json placeholder =
        Json::parse(R"j({"name": "U", "vars": [], "relation": "eq", "lhs": "", "rhs": ""})j");
    CHECK_THROWS_AS(identity_from_json(placeholder), InputError);
    const Json bad_relation =
        Json::parse(R"j({"name": "X", "vars": ["x"], "relation": "lt", "lhs": "x", "rhs": "x"})j");
    CHECK_THROWS_AS(identity_from_json(bad_relation), InputError);
    const Json le = Json::parse(
        R"j({"name": "X", "vars": ["x", "y"], "relation": "le", "lhs": "(^ x y)", "rhs": "x"})j");
    CHECK(identity_from_json(le).relation == Relation::below);
  }

  TEST_CASE("certificate round trip") {
    const FinLattice L = l_mn(1, 2).lattice;
    const MembershipResult r = decide_sub_lo(L);
    REQUIRE(r.accepted);
    const EmbeddingCertificate back = certificate_from_json(L, certificate_to_json(L, r.certificate));
    CHECK(back == r.certificate);
    CHECK(verify_certificate(L, back));
  }

  TEST_CASE("bi-track and map round trip") {
    const WeakBiTrack t = canonical_bitrack(2, 1);
    CHECK(bitrack_from_json(bitrack_to_json(t)) == t);
    const LatticeMap m{{0, 2, 1, 3}};
    CHECK(map_from_json(map_to_json(m)) == m);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"j({"size": "three"})j")), InputError);
    CHECK_THROWS_AS(lattice_from_json(Json::parse(R"j({"size": 2, "leq_pairs": [[0, 5]]})j")),
                    InputError);
    CHECK_THROWS_AS(poset_from_json(Json::parse(R"j([1, 2])j")), InputError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
    const std::string path = "colat_test_bad.json";
    {
      std::ofstream out(path);
      out << "{ not json";
    }
    CHECK_THROWS_AS(read_json_file(path), InputError);
    std::remove(path.c_str());
  }
}
