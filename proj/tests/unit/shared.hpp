#pragma once

#include <vector>

#include "colat/corpus.hpp"

// Corpus built once per test process: all lattices up to 7 elements plus the
// named catalog lattices.
inline const std::vector<colat::CorpusEntry>& corpus() {
  static const std::vector<colat::CorpusEntry> c = colat::standard_corpus(7);
  return c;
}

inline std::vector<colat::CorpusEntry> corpus_up_to(std::size_t size) {
  std::vector<colat::CorpusEntry> out;
  for (const auto& e : corpus())
    if (e.lattice.size() <= size) out.push_back(e);
  return out;
}
