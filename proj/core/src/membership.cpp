#include "colat/membership.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <tuple>

#include "colat/error.hpp"
#include "colat/homomorphism.hpp"
#include "colat/parallel.hpp"
#include "colat/poset.hpp"

namespace colat {

std::size_t EmbeddingCertificate::total_chain_length() const {
  std::size_t total = 0;
  for (const auto& c : components) total += c.chain.size();
  return total;
}

namespace {

using SetMask = std::uint64_t;

// Contiguous hull of a set of chain positions.
SetMask position_hull(SetMask m) {
  if (m == 0) return 0;
  const int lo = std::countr_zero(m);
  const int hi = 63 - std::countl_zero(m);
  const SetMask upper = hi == 63 ? ~SetMask{0} : (SetMask{1} << (hi + 1)) - 1;
  return upper & ~((SetMask{1} << lo) - 1);
}

bool contiguous(SetMask m) { return position_hull(m) == m; }

// Backtracking over total orders of J_a, placing elements left to right.
class OrderSearch {
 public:
  OrderSearch(const FinLattice& L, std::vector<Elem> elements) : L_(L), elems_(std::move(elements)) {
    const std::size_t m = elems_.size();
    if (m > 64) throw SizeGuardError("J_a has more than 64 elements");
    std::vector<SetMask> image(L.size(), 0);
    std::set<SetMask> distinct;
    for (std::size_t x = 0; x < L.size(); ++x) {
      for (std::size_t i = 0; i < m; ++i)
        if (L.leq(elems_[i], static_cast<Elem>(x))) image[x] |= SetMask{1} << i;
      if (image[x] != 0) distinct.insert(image[x]);
    }
    sets_.assign(distinct.begin(), distinct.end());
    containing_.assign(m, {});
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (std::size_t i = 0; i < m; ++i)
        if ((sets_[s] >> i) & 1u) containing_[i].push_back(sets_[s]);
    std::set<std::tuple<std::size_t, SetMask, SetMask>> triples;
    for (std::size_t x = 0; x < L.size(); ++x)
      for (std::size_t y = x + 1; y < L.size(); ++y) {
        const SetMask X = image[x], Y = image[y];
        const SetMask Z = image[L.join(static_cast<Elem>(x), static_cast<Elem>(y))];
        const SetMask T = Z & ~(X | Y);
        if (T == 0) continue;
        if (X == 0 || Y == 0) {
          impossible_ = true;
          return;
        }
        for (std::size_t i = 0; i < m; ++i)
          if ((T >> i) & 1u) triples.emplace(i, std::min(X, Y), std::max(X, Y));
      }
    triples_.assign(triples.begin(), triples.end());
    by_element_.assign(m, {});
    for (std::size_t t = 0; t < triples_.size(); ++t)
      by_element_[std::get<0>(triples_[t])].push_back(t);
  }

  std::optional<std::vector<Elem>> run() {
    if (impossible_) return std::nullopt;
    order_.clear();
    placed_ = 0;
    if (!place_next()) return std::nullopt;
    std::vector<Elem> chain;
    for (std::size_t i : order_) chain.push_back(elems_[i]);
    return chain;
  }

 private:
  bool place_next() {
    const std::size_t m = elems_.size();
    if (order_.size() == m) return true;
    for (std::size_t i = 0; i < m; ++i) {
      if ((placed_ >> i) & 1u) continue;
      if (!can_place(i)) continue;
      order_.push_back(i);
      placed_ |= SetMask{1} << i;
      if (lookahead_ok() && place_next()) return true;
      placed_ &= ~(SetMask{1} << i);
      order_.pop_back();
    }
    return false;
  }

  bool can_place(std::size_t i) const {
    if (!order_.empty()) {
      const SetMask last = SetMask{1} << order_.back();
      for (SetMask s : containing_[i])
        if ((s & placed_) != 0 && (s & last) == 0) return false;
    }
    for (std::size_t t : by_element_[i]) {
      const auto& [b, X, Y] = triples_[t];
      const bool x_before = (X & placed_) != 0, y_before = (Y & placed_) != 0;
      if (x_before == y_before) return false;
    }
    return true;
  }

  // An unplaced middle element whose two sides have both started can no
  // longer lie between them.
  bool lookahead_ok() const {
    for (const auto& [b, X, Y] : triples_)
      if (!((placed_ >> b) & 1u) && (X & placed_) != 0 && (Y & placed_) != 0) return false;
    return true;
  }

  const FinLattice& L_;
  std::vector<Elem> elems_;
  std::vector<SetMask> sets_;
  std::vector<std::vector<SetMask>> containing_;
  std::vector<std::tuple<std::size_t, SetMask, SetMask>> triples_;
  std::vector<std::vector<std::size_t>> by_element_;
  bool impossible_ = false;
  std::vector<std::size_t> order_;
  SetMask placed_ = 0;
};

std::optional<std::vector<Elem>> seeded_order(const DependencyData& data, Elem anchor) {
  const FinLattice& L = data.lattice();
  const auto& rd = data.rd(anchor);
  const std::size_t k = rd.size();
  std::vector<int> color(k, -1);
  for (std::size_t start = 0; start < k; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < k; ++v) {
        if (v == u || !L.leq(anchor, L.join(rd[u], rd[v]))) continue;
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Elem> left, right;
  for (std::size_t i = 0; i < k; ++i) (color[i] == 0 ? left : right).push_back(rd[i]);
  auto reach = [&](Elem x) { return L.down_count(L.join(anchor, x)); };
  std::stable_sort(left.begin(), left.end(), [&](Elem x, Elem y) { return reach(x) > reach(y); });
  std::stable_sort(right.begin(), right.end(),
                   [&](Elem x, Elem y) { return reach(x) < reach(y); });
  std::vector<Elem> chain = left;
  chain.push_back(anchor);
  chain.insert(chain.end(), right.begin(), right.end());
  return chain;
}

}  // namespace

bool valid_chain_order(const DependencyData& data, const ChainOrderWitness& witness) {
  const FinLattice& L = data.lattice();
  if (witness.anchor >= L.size() || !data.is_irreducible(witness.anchor)) return false;
  std::vector<Elem> expected = data.j_a(witness.anchor);
  std::vector<Elem> given = witness.chain;
  std::sort(given.begin(), given.end());
  if (given != expected) return false;
  const std::size_t m = witness.chain.size();
  if (m > 64) return false;
  std::vector<SetMask> image(L.size(), 0);
  for (std::size_t x = 0; x < L.size(); ++x) {
    for (std::size_t p = 0; p < m; ++p)
      if (L.leq(witness.chain[p], static_cast<Elem>(x))) image[x] |= SetMask{1} << p;
    if (!contiguous(image[x])) return false;
  }
  for (std::size_t x = 0; x < L.size(); ++x)
    for (std::size_t y = x + 1; y < L.size(); ++y) {
      const auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      if (image[L.join(ex, ey)] != position_hull(image[x] | image[y])) return false;
      if (image[L.meet(ex, ey)] != (image[x] & image[y])) return false;
    }
  return true;
}

std::optional<ChainOrderWitness> chain_order(const DependencyData& data, Elem anchor) {
  if (anchor >= data.lattice().size() || !data.is_irreducible(anchor))
    throw PreconditionError("anchor " + std::to_string(anchor) + " is not join-irreducible");
  if (auto seed = seeded_order(data, anchor)) {
    ChainOrderWitness witness{anchor, std::move(*seed)};
    if (valid_chain_order(data, witness)) return witness;
  }
  OrderSearch search(data.lattice(), data.j_a(anchor));
  auto chain = search.run();
  if (!chain) return std::nullopt;
  ChainOrderWitness witness{anchor, std::move(*chain)};
  if (!valid_chain_order(data, witness))
    throw IntegrityError("chain order search returned an invalid order");
  return witness;
}

std::optional<ChainOrderWitness> chain_order(const FinLattice& lattice, Elem anchor) {
  const DependencyData data(lattice);
  return chain_order(data, anchor);
}

CertificateComponent make_component(const FinLattice& L, const ChainOrderWitness& witness) {
  CertificateComponent component{witness.anchor, witness.chain, {}};
  component.images.resize(L.size());
  for (std::size_t x = 0; x < L.size(); ++x) {
    for (Elem b : witness.chain)
      if (L.leq(b, static_cast<Elem>(x))) component.images[x].push_back(b);
    std::sort(component.images[x].begin(), component.images[x].end());
  }
  return component;
}

bool verify_certificate(const FinLattice& L, const EmbeddingCertificate& certificate,
                        std::string* reason) {
  auto reject = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  const DependencyData data(L);
  const auto& js = data.irreducibles();
  std::vector<Elem> anchors;
  for (const auto& c : certificate.components) anchors.push_back(c.anchor);
  std::sort(anchors.begin(), anchors.end());
  if (anchors != js) return reject("components do not correspond one-to-one to J(L)");

  std::vector<std::vector<SetMask>> images;
  for (const auto& c : certificate.components) {
    const std::string where = "component " + L.label(c.anchor) + ": ";
    if (!valid_chain_order(data, ChainOrderWitness{c.anchor, c.chain}))
      return reject(where + "chain is not an admissible order of J_a(L)");
    if (c.images.size() != L.size()) return reject(where + "image table has wrong size");
    const std::size_t m = c.chain.size();
    std::vector<SetMask> image(L.size(), 0);
    for (std::size_t x = 0; x < L.size(); ++x) {
      for (Elem b : c.images[x]) {
        auto it = std::find(c.chain.begin(), c.chain.end(), b);
        if (it == c.chain.end()) return reject(where + "image mentions an element off the chain");
        image[x] |= SetMask{1} << (it - c.chain.begin());
      }
      if (static_cast<std::size_t>(std::popcount(image[x])) != c.images[x].size())
        return reject(where + "image lists an element twice");
      if (!contiguous(image[x])) return reject(where + "image of " + L.label(static_cast<Elem>(x)) + " is not convex");
    }
    (void)m;
    for (std::size_t x = 0; x < L.size(); ++x)
      for (std::size_t y = x + 1; y < L.size(); ++y) {
        const auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
        if (image[L.join(ex, ey)] != position_hull(image[x] | image[y]))
          return reject(where + "join of " + L.label(ex) + " and " + L.label(ey) +
                        " is not preserved");
        if (image[L.meet(ex, ey)] != (image[x] & image[y]))
          return reject(where + "meet of " + L.label(ex) + " and " + L.label(ey) +
                        " is not preserved");
      }
    images.push_back(std::move(image));
  }
  std::set<std::vector<SetMask>> tuples;
  for (std::size_t x = 0; x < L.size(); ++x) {
    std::vector<SetMask> tuple;
    for (const auto& image : images) tuple.push_back(image[x]);
    if (!tuples.insert(std::move(tuple)).second) return reject("product map is not injective");
  }
  if (certificate.total_chain_length() > js.size() * js.size())
    return reject("total chain length exceeds |J(L)|^2");
  return true;
}

MembershipResult decide_sub_lo(const FinLattice& lattice, unsigned workers) {
  const DependencyData data(lattice);
  const auto& js = data.irreducibles();
  std::vector<std::optional<ChainOrderWitness>> orders(js.size());
  parallel_for(js.size(), workers, [&](std::size_t i) { orders[i] = chain_order(data, js[i]); });

  MembershipResult result;
  for (std::size_t i = 0; i < js.size(); ++i)
    if (!orders[i]) {
      result.failing_anchor = js[i];
      break;
    }
  if (!result.failing_anchor) {
    result.accepted = true;
    for (const auto& order : orders)
      result.certificate.components.push_back(make_component(lattice, *order));
    std::string reason;
    if (!verify_certificate(lattice, result.certificate, &reason))
      throw IntegrityError("assembled certificate fails verification: " + reason);
    return result;
  }
  result.diagnostics.push_back("no admissible chain order on J_a(L) for anchor " +
                               lattice.label(*result.failing_anchor));
  for (SigmaCondition condition : {SigmaCondition::E, SigmaCondition::P, SigmaCondition::HS}) {
    SigmaResult sigma = check_sigma(lattice, condition);
    if (!sigma.holds) {
      result.failing_condition = condition;
      result.sigma_witness = std::move(sigma);
      result.diagnostics.push_back("join-irreducible condition " + to_string(condition) +
                                   " fails");
      break;
    }
  }
  if (!result.failing_condition)
    result.diagnostics.push_back("E, P and HS hold over J(L); the anchor search exhausted");
  return result;
}

std::size_t max_ja_size(const FinLattice& lattice) {
  const DependencyData data(lattice);
  std::size_t best = 0;
  for (Elem a : data.irreducibles()) best = std::max(best, data.rd(a).size() + 1);
  return best;
}

bool decide_sub_n(const FinLattice& lattice, std::size_t n, unsigned workers) {
  if (!decide_sub_lo(lattice, workers).accepted) return false;
  return max_ja_size(lattice) <= n;
}

bool brute_force_oracle(const FinLattice& lattice, unsigned workers) {
  if (lattice.size() > kOracleMaxSize)
    throw SizeGuardError("oracle is limited to lattices with at most " +
                         std::to_string(kOracleMaxSize) + " elements");
  const auto js = join_irreducibles(lattice);
  const CoLattice target = co_lattice(Poset::chain(std::max<std::size_t>(js.size(), 1)));
  std::vector<std::pair<Elem, Elem>> pending;
  for (Elem j : js)
    for (std::size_t y = 0; y < lattice.size(); ++y)
      if (!lattice.leq(j, static_cast<Elem>(y))) pending.emplace_back(j, static_cast<Elem>(y));
  while (!pending.empty()) {
    HomSearch search;
    search.separate = {pending.front()};
    search.workers = workers;
    auto hom = find_homomorphism(lattice, target.lattice, search);
    if (!hom) return false;
    std::erase_if(pending, [&](const std::pair<Elem, Elem>& p) {
      return !target.lattice.leq((*hom)(p.first), (*hom)(p.second));
    });
  }
  return true;
}

}  // namespace colat
