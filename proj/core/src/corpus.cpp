#include "colat/corpus.hpp"

#include <map>

#include "colat/catalog.hpp"
#include "colat/error.hpp"
#include "colat/homomorphism.hpp"

namespace colat {

namespace {

// Order on {bottom, 1..k, top} from an upper-triangular relation on the k
// middle elements; nullopt if the relation is not transitive.
std::optional<std::vector<std::uint8_t>> order_from_bits(std::size_t k, std::uint32_t bits) {
  const std::size_t n = k + 2;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
    leq[0 * n + i] = 1;
    leq[i * n + (n - 1)] = 1;
  }
  std::size_t b = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j, ++b)
      if ((bits >> b) & 1u) leq[(i + 1) * n + (j + 1)] = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= k; ++j)
      for (std::size_t l = 1; l <= k; ++l)
        if (leq[i * n + j] && leq[j * n + l] && !leq[i * n + l]) return std::nullopt;
  return leq;
}

bool has_all_joins(std::size_t n, const std::vector<std::uint8_t>& leq) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      std::size_t least = n;
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq[x * n + z] || !leq[y * n + z]) continue;
        if (least == n || leq[z * n + least]) least = z;
      }
      for (std::size_t z = 0; z < n; ++z)
        if (leq[x * n + z] && leq[y * n + z] && !leq[least * n + z]) return false;
    }
  return true;
}

}  // namespace

std::vector<FinLattice> lattices_of_size(std::size_t n) {
  if (n == 0) throw InputError("lattices have at least one element");
  if (n > kMaxEnumeratedSize)
    throw SizeGuardError("lattice enumeration is limited to " +
                         std::to_string(kMaxEnumeratedSize) + " elements");
  if (n == 1) return {FinLattice::chain(1)};
  const std::size_t k = n - 2;
  const std::size_t pairs = k * (k - (k > 0 ? 1 : 0)) / 2;
  std::vector<FinLattice> out;
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> by_profile;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << pairs); ++bits) {
    auto leq = order_from_bits(k, bits);
    // A finite bounded poset where all joins exist is a lattice.
    if (!leq || !has_all_joins(n, *leq)) continue;
    FinLattice candidate = FinLattice::from_order(n, std::move(*leq));
    auto& bucket = by_profile[order_profile(candidate)];
    bool seen = false;
    for (std::size_t idx : bucket)
      if (isomorphic(out[idx], candidate)) {
        seen = true;
        break;
      }
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(candidate));
  }
  return out;
}

std::vector<CorpusEntry> standard_corpus(std::size_t max_size) {
  std::vector<CorpusEntry> corpus;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto ls = lattices_of_size(n);
    for (std::size_t i = 0; i < ls.size(); ++i)
      corpus.push_back({std::to_string(n) + "." + std::to_string(i), std::move(ls[i])});
  }
  for (std::size_t n = 1; n <= 6; ++n)
    corpus.push_back({"Co(" + std::to_string(n) + ")", co_chain(n).lattice});
  for (std::size_t s = 2; s <= 5; ++s)
    for (std::size_t m = 1; m < s; ++m)
      corpus.push_back({"L(" + std::to_string(m) + "," + std::to_string(s - m) + ")",
                        l_mn(m, s - m).lattice});
  corpus.push_back({"M3", diamond_m3()});
  corpus.push_back({"N5", pentagon_n5()});
  corpus.push_back({"2^2", boolean_lattice(2)});
  corpus.push_back({"2^3", boolean_lattice(3)});
  return corpus;
}

}  // namespace colat
