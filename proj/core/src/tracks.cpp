#include "colat/tracks.hpp"

#include <bit>

#include "colat/error.hpp"

namespace colat {

namespace {

// Condition (1): x0 != (x0 ^ x1) v (x0 ^ x).
bool head_condition(const FinLattice& L, Elem x0, Elem x1, Elem x) {
  return x0 != L.join(L.meet(x0, x1), L.meet(x0, x));
}

// Condition (2) at k: x_k <= x_{k+1} v x.
bool step_condition(const FinLattice& L, Elem xk, Elem xk1, Elem x) {
  return L.leq(xk, L.join(xk1, x));
}

// Condition (3) at k: x_{k-1} not <= (x_k ^ x_{k+1}) v x.
bool gap_condition(const FinLattice& L, Elem prev, Elem xk, Elem xk1, Elem x) {
  return !L.leq(prev, L.join(L.meet(xk, xk1), x));
}

bool in_range(const FinLattice& L, const WeakTrack& t) {
  if (t.side >= L.size()) return false;
  for (Elem e : t.entries)
    if (e >= L.size()) return false;
  return true;
}

// Extends entries[0..k] (k >= 1) up to length n, checking (2) and (3).
bool extend_track(const FinLattice& L, std::vector<Elem>& entries, Elem side, std::size_t n,
                  const std::function<bool()>& done) {
  const std::size_t k = entries.size() - 1;
  if (k == n) return done();
  for (std::size_t c = 0; c < L.size(); ++c) {
    const auto next = static_cast<Elem>(c);
    if (!step_condition(L, entries[k], next, side)) continue;
    if (!gap_condition(L, entries[k - 1], entries[k], next, side)) continue;
    entries.push_back(next);
    const bool go_on = extend_track(L, entries, side, n, done);
    entries.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool is_weak_track(const FinLattice& L, const WeakTrack& t) {
  if (t.entries.size() < 2 || !in_range(L, t)) return false;
  const auto& x = t.entries;
  const std::size_t n = t.length();
  if (!head_condition(L, x[0], x[1], t.side)) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (!step_condition(L, x[k], x[k + 1], t.side)) return false;
  for (std::size_t k = 1; k < n; ++k)
    if (!gap_condition(L, x[k - 1], x[k], x[k + 1], t.side)) return false;
  return true;
}

bool is_weak_bitrack(const FinLattice& L, const WeakBiTrack& t) {
  if (!is_weak_track(L, t.sigma) || !is_weak_track(L, t.tau)) return false;
  const Elem x0 = t.sigma.entries[0];
  if (t.tau.entries[0] != x0) return false;
  const Elem x1 = t.sigma.entries[1], y1 = t.tau.entries[1];
  return L.leq(x0, L.join(x1, y1)) && head_condition(L, x0, x1, y1);
}

void for_each_weak_track(const FinLattice& L, std::size_t n,
                         const std::function<bool(const WeakTrack&)>& visit) {
  if (n == 0) throw InputError("track length must be positive");
  WeakTrack track;
  for (std::size_t a = 0; a < L.size(); ++a)
    for (std::size_t s = 0; s < L.size(); ++s)
      for (std::size_t b = 0; b < L.size(); ++b) {
        const auto x0 = static_cast<Elem>(a), x = static_cast<Elem>(s),
                   x1 = static_cast<Elem>(b);
        if (!head_condition(L, x0, x1, x) || !step_condition(L, x0, x1, x)) continue;
        track.entries = {x0, x1};
        track.side = x;
        if (!extend_track(L, track.entries, x, n, [&] { return visit(track); })) return;
      }
}

void for_each_weak_bitrack(const FinLattice& L, std::size_t m, std::size_t n,
                           const std::function<bool(const WeakBiTrack&)>& visit) {
  if (m == 0 || n == 0) throw InputError("track index entries must be positive");
  WeakBiTrack track;
  const std::size_t size = L.size();
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      for (std::size_t c = 0; c < size; ++c) {
        const auto x0 = static_cast<Elem>(a), x1 = static_cast<Elem>(b),
                   y1 = static_cast<Elem>(c);
        if (!L.leq(x0, L.join(x1, y1)) || !head_condition(L, x0, x1, y1)) continue;
        for (std::size_t s = 0; s < size; ++s) {
          const auto x = static_cast<Elem>(s);
          if (!head_condition(L, x0, x1, x) || !step_condition(L, x0, x1, x)) continue;
          track.sigma.entries = {x0, x1};
          track.sigma.side = x;
          const bool go_on = extend_track(L, track.sigma.entries, x, m, [&] {
            for (std::size_t t = 0; t < size; ++t) {
              const auto y = static_cast<Elem>(t);
              if (!head_condition(L, x0, y1, y) || !step_condition(L, x0, y1, y)) continue;
              track.tau.entries = {x0, y1};
              track.tau.side = y;
              if (!extend_track(L, track.tau.entries, y, n, [&] { return visit(track); }))
                return false;
            }
            return true;
          });
          if (!go_on) return;
        }
      }
}

std::vector<WeakBiTrack> weak_bitracks(const FinLattice& L, std::size_t m, std::size_t n,
                                       std::size_t limit) {
  std::vector<WeakBiTrack> result;
  if (limit == 0) return result;
  for_each_weak_bitrack(L, m, n, [&](const WeakBiTrack& t) {
    result.push_back(t);
    return result.size() < limit;
  });
  return result;
}

TrackEmbedding track_to_embedding(const FinLattice& L, const WeakBiTrack& track) {
  if (!is_weak_bitrack(L, track))
    throw PreconditionError("input is not a weak bi-track of the lattice");
  const std::size_t m = track.sigma.length(), n = track.tau.length();
  CoLattice source = co_lattice(Poset::chain(m + n));
  std::vector<Elem> singleton(m + n);
  for (std::size_t i = 0; i < m; ++i) singleton[i] = track.sigma.entries[m - i];
  for (std::size_t i = m; i < m + n; ++i) singleton[i] = track.tau.entries[i - m + 1];
  LatticeMap map;
  map.values.resize(source.lattice.size());
  const Elem empty_image = L.meet(singleton[0], singleton[1]);
  for (std::size_t e = 0; e < source.sets.size(); ++e) {
    Elem value = empty_image;
    for (std::size_t i : source.sets[e].elements()) value = L.join(value, singleton[i]);
    map.values[e] = value;
  }
  if (!preserves_operations(source.lattice, L, map) || !is_injective(map))
    throw PreconditionError(
        "the bi-track does not induce an embedding; the lattice is probably not a "
        "sublattice of a convex-set lattice of a chain");
  return TrackEmbedding{std::move(source), std::move(map)};
}

}  // namespace colat
