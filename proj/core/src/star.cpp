#include "colat/star.hpp"

#include <array>

#include "colat/builtin.hpp"
#include "colat/error.hpp"
#include "colat/identity_check.hpp"
#include "colat/parallel.hpp"

namespace colat {

namespace {

enum Point : std::size_t { p0, p1, p2, p3, pa, pb, pc, kPoints };

const std::vector<std::string> kLabels{"0", "1", "2", "3", "a", "b", "c"};

// Pairs whose relation the proof leaves open.
constexpr std::array<std::pair<std::size_t, std::size_t>, 5> kFree{
    {{p0, pa}, {p3, pb}, {pa, pb}, {pa, pc}, {pb, pc}}};

// Choice per free pair: 0 incomparable, 1 first < second, 2 second < first.
std::optional<Poset> completion(std::size_t code) {
  std::vector<std::pair<std::size_t, std::size_t>> rel{
      {p0, p1}, {p1, pc}, {pc, p2}, {p2, p3}, {p1, pb}, {pa, p2}};
  std::array<int, kFree.size()> choice{};
  for (std::size_t i = 0; i < kFree.size(); ++i) {
    choice[i] = static_cast<int>(code % 3);
    code /= 3;
    if (choice[i] == 1) rel.push_back(kFree[i]);
    if (choice[i] == 2) rel.emplace_back(kFree[i].second, kFree[i].first);
  }
  std::array<std::array<bool, kPoints>, kPoints> leq{};
  for (std::size_t i = 0; i < kPoints; ++i) leq[i][i] = true;
  for (auto [x, y] : rel) leq[x][y] = true;
  for (std::size_t k = 0; k < kPoints; ++k)
    for (std::size_t i = 0; i < kPoints; ++i)
      for (std::size_t j = 0; j < kPoints; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  for (std::size_t i = 0; i < kPoints; ++i)
    for (std::size_t j = i + 1; j < kPoints; ++j)
      if (leq[i][j] && leq[j][i]) return std::nullopt;
  if (leq[p1][pa] || leq[pa][p1] || leq[p2][pb] || leq[pb][p2]) return std::nullopt;
  // Keep a completion only if closing it does not decide another open pair.
  for (std::size_t i = 0; i < kFree.size(); ++i) {
    const auto [x, y] = kFree[i];
    const int actual = leq[x][y] ? 1 : leq[y][x] ? 2 : 0;
    if (actual != choice[i]) return std::nullopt;
  }
  std::vector<std::uint8_t> order(kPoints * kPoints);
  for (std::size_t i = 0; i < kPoints; ++i)
    for (std::size_t j = 0; j < kPoints; ++j) order[i * kPoints + j] = leq[i][j];
  return Poset::from_order(kPoints, std::move(order), kLabels);
}

// Assignment x_p = {p} in the identity's declared variable order.
std::vector<Elem> singleton_assignment(const Identity& star, const Poset& p, const CoLattice& co) {
  std::vector<Elem> values;
  for (const std::string& var : star.variables) {
    auto idx = p.find(var.substr(1));
    if (!idx) throw IntegrityError("no point for STAR variable " + var);
    values.push_back(*co.index_of(bit(*idx)));
  }
  return values;
}

}  // namespace

std::vector<SeparationWitness> search_pq(unsigned workers, PqSearchLog* log) {
  const Identity star = builtin_identity("STAR");
  std::size_t total = 1;
  for (std::size_t i = 0; i < kFree.size(); ++i) total *= 3;

  std::vector<std::optional<Poset>> posets(total);
  for (std::size_t code = 0; code < total; ++code) posets[code] = completion(code);

  std::vector<std::optional<SeparationWitness>> found(total);
  std::vector<std::uint8_t> singleton_fails(total, 0);
  // Completions run one after another; each check uses the worker pool.
  for (std::size_t code = 0; code < total; ++code) {
    if (!posets[code]) continue;
    SeparationWitness w{*posets[code], pc, posets[code]->without(pc), false, false, 0, 0, {}};
    const CoLattice co_p = co_lattice(w.p);
    const auto values = singleton_assignment(star, w.p, co_p);
    w.singleton_lhs = evaluate(co_p.lattice, star.lhs, star.variables, values);
    w.singleton_rhs = evaluate(co_p.lattice, star.rhs, star.variables, values);
    if (co_p.lattice.leq(w.singleton_lhs, w.singleton_rhs)) continue;
    singleton_fails[code] = 1;
    CheckOptions options;
    options.workers = workers;
    const CheckResult on_p = check_identity(co_p.lattice, star, options);
    w.star_holds_p = on_p.holds;
    if (on_p.counterexample) w.p_counterexample = *on_p.counterexample;
    const CoLattice co_q = co_lattice(w.q);
    w.star_holds_q = check_identity(co_q.lattice, star, options).holds;
    if (w.star_holds_q && !w.star_holds_p) found[code] = std::move(w);
  }

  std::vector<SeparationWitness> out;
  PqSearchLog local;
  local.completions = total;
  for (std::size_t code = 0; code < total; ++code) {
    if (!posets[code]) continue;
    ++local.valid_posets;
    local.singleton_failures += singleton_fails[code];
    std::string line = "completion " + std::to_string(code) + ": |Co(Q)| = " +
                       std::to_string(co_lattice(*posets[code]).lattice.size());
    if (!singleton_fails[code])
      line += ", Co(P) passes at singletons";
    else
      line += found[code] ? ", separates" : ", Co(Q) fails STAR";
    local.lines.push_back(std::move(line));
    if (found[code]) out.push_back(std::move(*found[code]));
  }
  if (log) *log = std::move(local);
  return out;
}

SeparationReport verify_separation(const Poset& p, const Poset& q, unsigned workers) {
  std::vector<std::size_t> embedding;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto idx = q.find(p.label(i));
    if (!idx) throw InputError("P element '" + p.label(i) + "' does not occur in Q");
    embedding.push_back(*idx);
  }
  if (q.induced(embedding) != p) throw InputError("P is not an induced sub-poset of Q");

  const Identity star = builtin_identity("STAR");
  CheckOptions options;
  options.workers = workers;
  SeparationReport report;
  const CheckResult on_p = check_identity(co_lattice(p).lattice, star, options);
  const CheckResult on_q = check_identity(co_lattice(q).lattice, star, options);
  report.star_holds_p = on_p.holds;
  report.star_holds_q = on_q.holds;
  report.p_counterexample = on_p.counterexample;
  report.q_counterexample = on_q.counterexample;
  return report;
}

}  // namespace colat
