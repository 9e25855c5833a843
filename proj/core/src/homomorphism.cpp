#include "colat/homomorphism.hpp"

#include <algorithm>

#include "colat/error.hpp"
#include "colat/parallel.hpp"

namespace colat {

LatticeMap identity_map(std::size_t size) {
  LatticeMap map;
  map.values.resize(size);
  for (std::size_t i = 0; i < size; ++i) map.values[i] = static_cast<Elem>(i);
  return map;
}

LatticeMap compose(const LatticeMap& first, const LatticeMap& second) {
  LatticeMap result;
  result.values.reserve(first.size());
  for (Elem v : first.values) result.values.push_back(second(v));
  return result;
}

bool preserves_operations(const FinLattice& source, const FinLattice& target,
                          const LatticeMap& map) {
  const std::size_t n = source.size();
  if (map.size() != n) return false;
  for (Elem v : map.values)
    if (v >= target.size()) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      if (map(source.join(ex, ey)) != target.join(map(ex), map(ey))) return false;
      if (map(source.meet(ex, ey)) != target.meet(map(ex), map(ey))) return false;
    }
  return true;
}

bool is_injective(const LatticeMap& map) {
  std::vector<Elem> sorted = map.values;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_surjective(const LatticeMap& map, std::size_t target_size) {
  std::vector<std::uint8_t> hit(target_size, 0);
  for (Elem v : map.values)
    if (v < target_size) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Backtracking over h(bottom) and h(j) for the join-irreducibles j of the
// source, in a linear extension. Every other value is the join of the
// values of the join-irreducibles below it and is checked as soon as it is
// known.
class HomEngine {
 public:
  HomEngine(const FinLattice& source, const FinLattice& target, const HomSearch& search)
      : src_(source), dst_(target), search_(search) {
    const std::size_t n = src_.size();
    std::vector<Elem> irreducibles = join_irreducibles(src_);
    std::stable_sort(irreducibles.begin(), irreducibles.end(), [&](Elem a, Elem b) {
      return src_.down_count(a) < src_.down_count(b);
    });
    vars_.push_back(src_.bottom());
    for (Elem j : irreducibles) vars_.push_back(j);
    std::vector<std::size_t> position(n, 0);
    for (std::size_t s = 1; s < vars_.size(); ++s) position[vars_[s]] = s;

    lower_cover_.assign(n, kUnset);
    for (Elem j : irreducibles) lower_cover_[j] = lower_cover_of_irreducible(src_, j);

    ready_step_.assign(n, 0);
    below_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      for (Elem j : irreducibles)
        if (src_.leq(j, static_cast<Elem>(x))) {
          below_[x].push_back(j);
          ready_step_[x] = std::max(ready_step_[x], position[j]);
        }
    }
    ready_.assign(vars_.size(), {});
    for (std::size_t x = 0; x < n; ++x) {
      const auto e = static_cast<Elem>(x);
      if (std::find(vars_.begin(), vars_.end(), e) == vars_.end())
        ready_[ready_step_[x]].push_back(e);
    }
    ready_count_.assign(vars_.size(), 0);
    {
      std::size_t count = 0;
      for (std::size_t s = 0; s < vars_.size(); ++s) {
        count += 1 + ready_[s].size();
        ready_count_[s] = count;
      }
    }
    checks_.assign(vars_.size(), {});
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        const auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
        if (src_.leq(ex, ey) || src_.leq(ey, ex)) continue;
        checks_[ready_step_[src_.join(ex, ey)]].emplace_back(ex, ey);
      }
    separations_.assign(vars_.size(), {});
    for (auto [x, y] : search_.separate) {
      if (x >= n || y >= n) throw InputError("separation pair out of range");
      separations_[std::max(ready_step_[x], ready_step_[y])].emplace_back(x, y);
    }
    values_.assign(n, kUnset);
    used_.assign(dst_.size(), 0);
    distinct_ = 0;
  }

  std::vector<Elem> first_candidates() const {
    if (search_.surjective) return {dst_.bottom()};
    std::vector<Elem> all(dst_.size());
    for (std::size_t t = 0; t < all.size(); ++t) all[t] = static_cast<Elem>(t);
    return all;
  }

  // Runs the search with h(bottom) fixed to `first`. Returns false if the
  // visitor asked to stop.
  template <class Visit>
  bool run_from(Elem first, Visit&& visit) {
    if (search_.surjective && src_.size() < dst_.size()) return true;
    return try_value(0, first, visit);
  }

 private:
  template <class Visit>
  bool descend(std::size_t step, Visit& visit) {
    if (step == vars_.size()) {
      LatticeMap map{values_};
      return visit(map);
    }
    const Elem var = vars_[step];
    const Elem floor = values_[lower_cover_[var]];
    for (std::size_t t = 0; t < dst_.size(); ++t) {
      const auto candidate = static_cast<Elem>(t);
      if (!dst_.leq(floor, candidate)) continue;
      if (search_.injective && candidate == floor) continue;
      if (!try_value(step, candidate, visit)) return false;
    }
    return true;
  }

  template <class Visit>
  bool try_value(std::size_t step, Elem candidate, Visit& visit) {
    const Elem var = vars_[step];
    std::size_t assigned = 0;
    bool ok = assign(var, candidate);
    if (ok) {
      ++assigned;
      for (Elem x : ready_[step]) {
        Elem value = values_[src_.bottom()];
        for (Elem j : below_[x]) value = dst_.join(value, values_[j]);
        if (!assign(x, value)) {
          ok = false;
          break;
        }
        ++assigned;
      }
    }
    if (ok) ok = checks_pass(step);
    bool keep_going = true;
    if (ok) keep_going = descend(step + 1, visit);
    // Undo in reverse order of assignment.
    if (assigned > 0) unassign(var);
    for (std::size_t k = 1; k < assigned; ++k) unassign(ready_[step][k - 1]);
    return keep_going;
  }

  bool assign(Elem x, Elem value) {
    if (search_.injective && used_[value] > 0) return false;
    values_[x] = value;
    if (used_[value]++ == 0) ++distinct_;
    return true;
  }

  void unassign(Elem x) {
    if (--used_[values_[x]] == 0) --distinct_;
    values_[x] = kUnset;
  }

  bool checks_pass(std::size_t step) const {
    for (auto [x, y] : checks_[step]) {
      if (values_[src_.join(x, y)] != dst_.join(values_[x], values_[y])) return false;
      if (values_[src_.meet(x, y)] != dst_.meet(values_[x], values_[y])) return false;
    }
    for (auto [x, y] : separations_[step])
      if (dst_.leq(values_[x], values_[y])) return false;
    if (search_.surjective) {
      const std::size_t remaining = src_.size() - ready_count_[step];
      if (distinct_ + remaining < dst_.size()) return false;
    }
    return true;
  }

  const FinLattice& src_;
  const FinLattice& dst_;
  const HomSearch& search_;
  std::vector<Elem> vars_;
  std::vector<Elem> lower_cover_;
  std::vector<std::size_t> ready_step_;
  std::vector<std::vector<Elem>> below_;
  std::vector<std::vector<Elem>> ready_;
  std::vector<std::size_t> ready_count_;
  std::vector<std::vector<std::pair<Elem, Elem>>> checks_;
  std::vector<std::vector<std::pair<Elem, Elem>>> separations_;
  std::vector<Elem> values_;
  std::vector<std::size_t> used_;
  std::size_t distinct_ = 0;
};

}  // namespace

std::optional<LatticeMap> find_homomorphism(const FinLattice& source,
                                            const FinLattice& target,
                                            const HomSearch& search) {
  const auto firsts = HomEngine(source, target, search).first_candidates();
  std::vector<std::optional<LatticeMap>> found(firsts.size());
  auto best = parallel_first(firsts.size(), search.workers, [&](std::size_t task) {
    HomEngine engine(source, target, search);
    engine.run_from(firsts[task], [&](const LatticeMap& map) {
      found[task] = map;
      return false;
    });
    return found[task].has_value();
  });
  if (!best) return std::nullopt;
  if (!preserves_operations(source, target, *found[*best]))
    throw IntegrityError("homomorphism search produced a map that is not a homomorphism");
  return found[*best];
}

void for_each_homomorphism(const FinLattice& source, const FinLattice& target,
                           const HomSearch& search,
                           const std::function<bool(const LatticeMap&)>& visit) {
  HomEngine engine(source, target, search);
  for (Elem first : engine.first_candidates())
    if (!engine.run_from(first, [&](const LatticeMap& map) { return visit(map); })) return;
}

std::optional<LatticeMap> find_embedding(const FinLattice& source, const FinLattice& target,
                                         unsigned workers) {
  if (source.size() > target.size()) return std::nullopt;
  HomSearch search;
  search.injective = true;
  search.workers = workers;
  return find_homomorphism(source, target, search);
}

std::optional<LatticeMap> find_isomorphism(const FinLattice& a, const FinLattice& b) {
  if (a.size() != b.size() || order_profile(a) != order_profile(b)) return std::nullopt;
  HomSearch search;
  search.injective = true;
  search.surjective = true;
  return find_homomorphism(a, b, search);
}

bool isomorphic(const FinLattice& a, const FinLattice& b) {
  return find_isomorphism(a, b).has_value();
}

std::vector<LatticeMap> surjections(const FinLattice& source, const FinLattice& target,
                                    std::size_t limit) {
  std::vector<LatticeMap> result;
  if (limit == 0) return result;
  HomSearch search;
  search.surjective = true;
  for_each_homomorphism(source, target, search, [&](const LatticeMap& map) {
    result.push_back(map);
    return result.size() < limit;
  });
  return result;
}

LatticeMap first_projection(const FinLattice& left, const FinLattice& right) {
  LatticeMap map;
  for (std::size_t i = 0; i < left.size() * right.size(); ++i)
    map.values.push_back(static_cast<Elem>(i / right.size()));
  return map;
}

LatticeMap second_projection(const FinLattice& left, const FinLattice& right) {
  LatticeMap map;
  for (std::size_t i = 0; i < left.size() * right.size(); ++i)
    map.values.push_back(static_cast<Elem>(i % right.size()));
  return map;
}

}  // namespace colat
