#include "colat/sigma.hpp"

#include <array>

#include "colat/dependency.hpp"
#include "colat/error.hpp"

namespace colat {

SigmaCondition parse_sigma_condition(std::string_view name) {
  if (name == "E") return SigmaCondition::E;
  if (name == "P") return SigmaCondition::P;
  if (name == "HS") return SigmaCondition::HS;
  throw InputError("unknown condition '" + std::string(name) + "' (known: E, P, HS)");
}

std::string to_string(SigmaCondition condition) {
  switch (condition) {
    case SigmaCondition::E:
      return "E";
    case SigmaCondition::P:
      return "P";
    case SigmaCondition::HS:
      return "HS";
  }
  return "?";
}

bool minimal_in_first(const FinLattice& L, Elem a, Elem b, Elem c) {
  if (!L.leq(a, L.join(b, c))) return false;
  const Elem lower = lower_cover_of_irreducible(L, b);
  return !L.leq(a, L.join(lower, c));
}

namespace {

SigmaResult check_e(const FinLattice& L, const std::vector<Elem>& js) {
  SigmaResult result{true, {"x", "a", "b0", "b1", "b2"}, std::nullopt};
  static constexpr std::array<std::array<int, 3>, 6> kPermutations{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (Elem x : js)
    for (Elem a : js) {
      std::vector<Elem> bs;
      for (Elem b : js)
        if (is_minimal_pair_cover(L, x, a, b)) bs.push_back(b);
      for (Elem b0 : bs)
        for (Elem b1 : bs)
          for (Elem b2 : bs) {
            const std::array<Elem, 3> b{b0, b1, b2};
            bool found = false;
            for (const auto& s : kPermutations) {
              const Elem s0 = b[s[0]], s1 = b[s[1]], s2 = b[s[2]];
              if (L.leq(s0, L.join(x, s1)) && L.leq(L.join(x, s1), L.join(x, s2)) &&
                  L.leq(s1, L.join(s0, s2))) {
                found = true;
                break;
              }
            }
            if (!found) {
              result.holds = false;
              result.witness = std::vector<Elem>{x, a, b0, b1, b2};
              return result;
            }
          }
    }
  return result;
}

SigmaResult check_p(const FinLattice& L, const std::vector<Elem>& js) {
  SigmaResult result{true, {"a", "b", "c", "d", "b0", "b1"}, std::nullopt};
  for (Elem a : js)
    for (Elem b : js)
      for (Elem c : js) {
        if (!is_minimal_pair_cover(L, a, b, c)) continue;
        for (Elem d : js) {
          if (!is_minimal_pair_cover(L, a, c, d)) continue;
          if (L.leq(b, L.join(a, d))) continue;
          for (Elem b0 : js)
            for (Elem b1 : js) {
              if (!L.leq(b, L.join(b0, b1))) continue;
              bool found = false;
              for (Elem bi : {b0, b1})
                if (L.leq(a, L.join(bi, c)) && L.leq(b, L.join(a, bi)) &&
                    L.leq(b, L.join(bi, d))) {
                  found = true;
                  break;
                }
              if (!found) {
                result.holds = false;
                result.witness = std::vector<Elem>{a, b, c, d, b0, b1};
                return result;
              }
            }
        }
      }
  return result;
}

SigmaResult check_hs(const FinLattice& L, const std::vector<Elem>& js) {
  SigmaResult result{true, {"a", "b", "c", "b0", "b1"}, std::nullopt};
  for (Elem a : js)
    for (Elem b : js) {
      if (a == b) continue;
      for (Elem c : js) {
        if (!minimal_in_first(L, a, b, c)) continue;
        for (Elem b0 : js)
          for (Elem b1 : js) {
            if (!L.leq(b, L.join(b0, b1)) || L.leq(b, b0) || L.leq(b, b1)) continue;
            const std::array<Elem, 2> bi{b0, b1};
            bool found = false;
            for (int i = 0; i < 2 && !found; ++i) {
              if (!L.leq(b, L.join(a, bi[i]))) continue;
              const bool first = L.leq(a, L.join(bi[i], c)) && L.leq(a, L.join(b, bi[1 - i]));
              const bool second = L.leq(a, L.join(b0, c)) && L.leq(a, L.join(b1, c));
              found = first || second;
            }
            if (!found) {
              result.holds = false;
              result.witness = std::vector<Elem>{a, b, c, b0, b1};
              return result;
            }
          }
      }
    }
  return result;
}

}  // namespace

SigmaResult check_sigma(const FinLattice& lattice, SigmaCondition condition) {
  const std::vector<Elem> js = join_irreducibles(lattice);
  switch (condition) {
    case SigmaCondition::E:
      return check_e(lattice, js);
    case SigmaCondition::P:
      return check_p(lattice, js);
    case SigmaCondition::HS:
      return check_hs(lattice, js);
  }
  throw InputError("unknown condition");
}

}  // namespace colat
