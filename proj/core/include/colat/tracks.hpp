#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "colat/homomorphism.hpp"
#include "colat/lattice.hpp"
#include "colat/poset.hpp"

namespace colat {

/// Entries x_0..x_n and side element x.
struct WeakTrack {
  std::vector<Elem> entries;
  Elem side = 0;

  std::size_t length() const noexcept { return entries.empty() ? 0 : entries.size() - 1; }
  friend bool operator==(const WeakTrack&, const WeakTrack&) = default;
};

/// Two weak tracks with a common head; index (sigma.length(), tau.length()).
struct WeakBiTrack {
  WeakTrack sigma;
  WeakTrack tau;

  friend bool operator==(const WeakBiTrack&, const WeakBiTrack&) = default;
};

bool is_weak_track(const FinLattice& lattice, const WeakTrack& track);
bool is_weak_bitrack(const FinLattice& lattice, const WeakBiTrack& track);

/// Visits every weak track of length n, ordered lexicographically by
/// (x_0, x, x_1, ..., x_n). Stops when `visit` returns false.
void for_each_weak_track(const FinLattice& lattice, std::size_t n,
                         const std::function<bool(const WeakTrack&)>& visit);

/// Visits every weak bi-track of index (m, n), ordered lexicographically by
/// (x_0, x_1, y_1, x, x_2, ..., x_m, y, y_2, ..., y_n).
void for_each_weak_bitrack(const FinLattice& lattice, std::size_t m, std::size_t n,
                           const std::function<bool(const WeakBiTrack&)>& visit);

std::vector<WeakBiTrack> weak_bitracks(const FinLattice& lattice, std::size_t m,
                                       std::size_t n,
                                       std::size_t limit = static_cast<std::size_t>(-1));

struct TrackEmbedding {
  CoLattice source;  // Co of the (m+n)-element chain
  LatticeMap map;
};

/// Sends {i} to x_{m-i} for i < m and to y_{i-m+1} for m <= i < m+n, extended
/// by joins. Throws PreconditionError if the track is invalid or the result
/// is not an embedding.
TrackEmbedding track_to_embedding(const FinLattice& lattice, const WeakBiTrack& track);

}  // namespace colat
