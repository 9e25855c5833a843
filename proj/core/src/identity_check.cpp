#include "colat/identity_check.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <tuple>

#include "colat/error.hpp"
#include "colat/parallel.hpp"

namespace colat {

std::uint64_t assignment_count(std::size_t lattice_size, std::size_t variables) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < variables; ++i) {
    if (lattice_size != 0 &&
        total > std::numeric_limits<std::uint64_t>::max() / lattice_size)
      return std::numeric_limits<std::uint64_t>::max();
    total *= lattice_size;
  }
  return total;
}

bool violates(const FinLattice& lattice, const Identity& identity,
              const std::vector<Elem>& assignment) {
  const Elem l = evaluate(lattice, identity.lhs, identity.variables, assignment);
  const Elem r = evaluate(lattice, identity.rhs, identity.variables, assignment);
  return identity.relation == Relation::equals ? l != r : !lattice.leq(l, r);
}

CheckResult check_identity_naive(const FinLattice& lattice, const Identity& identity) {
  const std::size_t k = identity.variables.size();
  const std::size_t n = lattice.size();
  std::vector<Elem> values(k, 0);
  for (;;) {
    if (violates(lattice, identity, values)) return CheckResult{false, values};
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return CheckResult{true, std::nullopt};
    }
    if (k == 0) return CheckResult{true, std::nullopt};
  }
}

namespace {

enum class Op : std::uint8_t { join, meet };

struct Instr {
  Op op;
  std::uint32_t a, b, out;
};

// Straight-line program over slots: slots [0, k) hold the variables, every
// other slot is the output of one binary instruction. Instructions are
// grouped by level, the largest variable index they depend on.
class Program {
 public:
  Program(const Identity& identity) : k_(identity.variables.size()) {
    level_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) level_[i] = i;
    by_level_.assign(std::max<std::size_t>(k_, 1), {});
    lhs_ = compile(identity.lhs, identity.variables);
    rhs_ = compile(identity.rhs, identity.variables);
  }

  std::size_t variables() const { return k_; }
  std::size_t slots() const { return level_.size(); }
  std::uint32_t lhs() const { return lhs_; }
  std::uint32_t rhs() const { return rhs_; }
  const std::vector<Instr>& level(std::size_t l) const { return by_level_[l]; }

 private:
  std::uint32_t compile(const Term& term, const std::vector<std::string>& vars) {
    if (term.kind() == Term::Kind::variable) {
      auto it = std::find(vars.begin(), vars.end(), term.name());
      if (it == vars.end()) throw InputError("variable '" + term.name() + "' is not declared");
      return static_cast<std::uint32_t>(it - vars.begin());
    }
    const Op op = term.kind() == Term::Kind::join ? Op::join : Op::meet;
    std::uint32_t acc = compile(term.children().front(), vars);
    for (std::size_t i = 1; i < term.children().size(); ++i)
      acc = emit(op, acc, compile(term.children()[i], vars));
    return acc;
  }

  std::uint32_t emit(Op op, std::uint32_t a, std::uint32_t b) {
    if (a == b) return a;
    if (a > b) std::swap(a, b);
    const auto key = std::make_tuple(op, a, b);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto out = static_cast<std::uint32_t>(level_.size());
    const std::size_t lvl = std::max(level_[a], level_[b]);
    level_.push_back(lvl);
    by_level_[lvl].push_back(Instr{op, a, b, out});
    cache_.emplace(key, out);
    return out;
  }

  std::size_t k_;
  std::vector<std::size_t> level_;
  std::vector<std::vector<Instr>> by_level_;
  std::map<std::tuple<Op, std::uint32_t, std::uint32_t>, std::uint32_t> cache_;
  std::uint32_t lhs_ = 0, rhs_ = 0;
};

enum class Test { below, equal };

class Checker {
 public:
  Checker(const FinLattice& lattice, const Program& program, Test test, bool prune)
      : n_(lattice.size()),
        join_(lattice.join_table().data()),
        meet_(lattice.meet_table().data()),
        leq_(lattice.order_matrix().data()),
        bottom_(lattice.bottom()),
        top_(lattice.top()),
        program_(program),
        test_(test),
        prune_(prune),
        slots_(program.slots(), 0),
        values_(program.variables(), 0) {}

  // Searches the subtree whose first `prefix.size()` variables are fixed.
  // Returns true and leaves the assignment in values() on failure.
  bool find_failure(const std::vector<Elem>& prefix) {
    const std::size_t d = prefix.size();
    for (std::size_t i = 0; i < d; ++i) {
      assign(i, prefix[i]);
    }
    if (d == program_.variables()) return fails();
    if (d > 0 && settled(d - 1)) return false;
    return descend(d);
  }

  const std::vector<Elem>& values() const { return values_; }

 private:
  void assign(std::size_t var, Elem value) {
    values_[var] = value;
    slots_[var] = value;
    run(var);
  }

  void run(std::size_t level) {
    Elem* s = slots_.data();
    for (const Instr& in : program_.level(level)) {
      const std::size_t idx = static_cast<std::size_t>(s[in.a]) * n_ + s[in.b];
      s[in.out] = in.op == Op::join ? join_[idx] : meet_[idx];
    }
  }

  bool leq(Elem a, Elem b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }

  bool fails() const {
    const Elem l = slots_[program_.lhs()], r = slots_[program_.rhs()];
    return test_ == Test::below ? !leq(l, r) : l != r;
  }

  // With variables 0..d assigned: true if every completion satisfies the
  // identity, judged from evaluations with the free variables at top and at
  // bottom (terms are monotone in each variable).
  bool settled(std::size_t d) {
    const std::size_t k = program_.variables();
    if (!prune_ || k - 1 - d < 2) return false;
    for (std::size_t v = d + 1; v < k; ++v) slots_[v] = top_;
    for (std::size_t l = d + 1; l < k; ++l) run(l);
    const Elem lhs_high = slots_[program_.lhs()], rhs_high = slots_[program_.rhs()];
    for (std::size_t v = d + 1; v < k; ++v) slots_[v] = bottom_;
    for (std::size_t l = d + 1; l < k; ++l) run(l);
    const Elem lhs_low = slots_[program_.lhs()], rhs_low = slots_[program_.rhs()];
    if (!leq(lhs_high, rhs_low)) return false;
    return test_ == Test::below || leq(rhs_high, lhs_low);
  }

  bool descend(std::size_t d) {
    const std::size_t k = program_.variables();
    for (std::size_t v = 0; v < n_; ++v) {
      assign(d, static_cast<Elem>(v));
      if (d + 1 == k) {
        if (fails()) return true;
        continue;
      }
      if (settled(d)) continue;
      if (descend(d + 1)) return true;
    }
    return false;
  }

  std::size_t n_;
  const Elem* join_;
  const Elem* meet_;
  const std::uint8_t* leq_;
  Elem bottom_, top_;
  const Program& program_;
  Test test_;
  bool prune_;
  std::vector<Elem> slots_;
  std::vector<Elem> values_;
};

}  // namespace

CheckResult check_identity(const FinLattice& lattice, const Identity& identity,
                           const CheckOptions& options) {
  const std::size_t k = identity.variables.size();
  const std::size_t n = lattice.size();
  if (options.max_assignments != 0 && assignment_count(n, k) > options.max_assignments)
    throw SizeGuardError("identity check needs " + std::to_string(n) + "^" +
                         std::to_string(k) + " assignments, above the guard of " +
                         std::to_string(options.max_assignments));
  const Program program(identity);
  const Test test = identity.relation == Relation::below ||
                            (identity.rhs_below_lhs && options.use_known_inclusion)
                        ? Test::below
                        : Test::equal;
  if (k == 0) {
    Checker checker(lattice, program, test, false);
    if (checker.find_failure({})) return CheckResult{false, std::vector<Elem>{}};
    return CheckResult{true, std::nullopt};
  }
  // Tasks fix a prefix of one or two variables; the split does not depend on
  // the worker count, and the least failing task holds the least witness.
  const std::size_t prefix = (k >= 3 && n <= 64) ? 2 : 1;
  const std::size_t tasks = prefix == 2 ? n * n : n;
  std::vector<std::vector<Elem>> witness(tasks);
  auto first = parallel_first(tasks, options.workers, [&](std::size_t t) {
    std::vector<Elem> fixed;
    if (prefix == 2)
      fixed = {static_cast<Elem>(t / n), static_cast<Elem>(t % n)};
    else
      fixed = {static_cast<Elem>(t)};
    Checker checker(lattice, program, test, options.prune);
    if (!checker.find_failure(fixed)) return false;
    witness[t] = checker.values();
    return true;
  });
  if (!first) return CheckResult{true, std::nullopt};
  return CheckResult{false, witness[*first]};
}

}  // namespace colat
