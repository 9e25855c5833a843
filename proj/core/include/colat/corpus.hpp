#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "colat/lattice.hpp"

namespace colat {

inline constexpr std::size_t kMaxEnumeratedSize = 8;

/// One lattice per isomorphism class of lattices with n elements, n <= 8.
/// Order is deterministic: classes appear in order of their first naturally
/// labelled representative.
std::vector<FinLattice> lattices_of_size(std::size_t n);

struct CorpusEntry {
  std::string name;
  FinLattice lattice;
};

/// All lattices with 1..max_size elements (named "n.k"), then the catalog
/// lattices Co(1..6) and L(m,n) with m+n <= 5, then M3, N5, 2^2 and 2^3.
std::vector<CorpusEntry> standard_corpus(std::size_t max_size);

}  // namespace colat
