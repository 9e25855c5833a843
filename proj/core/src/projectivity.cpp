#include "colat/projectivity.hpp"

#include <charconv>

#include "colat/catalog.hpp"
#include "colat/error.hpp"

namespace colat {

std::string LambdaShape::to_string() const {
  if (kind == Kind::plain) return "co:" + std::to_string(n);
  return "lmn:" + std::to_string(m) + "," + std::to_string(n);
}

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
    throw InputError("bad target '" + std::string(whole) + "' (expected co:N or lmn:M,N)");
  return value;
}

void check_shape(const LambdaShape& shape) {
  if (shape.n < 1 || (shape.kind == LambdaShape::Kind::split && shape.m < 1))
    throw InputError("shape " + shape.to_string() + " needs positive indices");
}

// x_k <= x_i v x_j for i < k < j.
bool chain_inequalities(const FinLattice& L, const std::vector<Elem>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < a.size(); ++k)
      for (std::size_t j = k + 1; j < a.size(); ++j)
        if (!L.leq(a[k], L.join(a[i], a[j]))) return false;
  return true;
}

bool skipped_pair(const LambdaShape& shape, std::size_t i, std::size_t j) {
  return shape.kind == LambdaShape::Kind::split &&
         ((i == shape.m - 1 && j == shape.m) || (j == shape.m - 1 && i == shape.m));
}

}  // namespace

LambdaShape parse_lambda_shape(std::string_view text) {
  if (text.starts_with("co:")) return LambdaShape::plain(parse_count(text.substr(3), text));
  if (text.starts_with("lmn:")) {
    const std::string_view rest = text.substr(4);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos)
      throw InputError("bad target '" + std::string(text) + "' (expected lmn:M,N)");
    return LambdaShape::split(parse_count(rest.substr(0, comma), text),
                              parse_count(rest.substr(comma + 1), text));
  }
  throw InputError("bad target '" + std::string(text) + "' (expected co:N or lmn:M,N)");
}

CoLattice lambda_source(const LambdaShape& shape) {
  check_shape(shape);
  return shape.kind == LambdaShape::Kind::plain ? co_chain(shape.n) : l_mn(shape.m, shape.n);
}

std::vector<Elem> lambda_source_generators(const LambdaShape& shape, const CoLattice& source) {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < shape.generator_count(); ++i)
    gens.push_back(shape.kind == LambdaShape::Kind::split && i == shape.m
                       ? l_mn_cm(source, shape.m)
                       : l_mn_singleton(source, i));
  return gens;
}

bool lambda_holds(const FinLattice& L, const LambdaConfig& config) {
  const LambdaShape& shape = config.shape;
  check_shape(shape);
  const auto& a = config.generators;
  if (a.size() != shape.generator_count())
    throw InputError("shape " + shape.to_string() + " takes " +
                     std::to_string(shape.generator_count()) + " generators, got " +
                     std::to_string(a.size()));
  for (Elem x : a)
    if (x >= L.size()) throw InputError("generator index out of range");
  if (config.base >= L.size()) throw InputError("base index out of range");
  if (!chain_inequalities(L, a)) return false;
  if (shape.kind == LambdaShape::Kind::plain && shape.n == 1) return L.leq(config.base, a[0]);
  const Elem u = shape.kind == LambdaShape::Kind::plain ? L.meet(a[0], a[1]) : L.meet(a[0], a[2]);
  if (config.base != u) return false;
  if (shape.kind == LambdaShape::Kind::split && !L.leq(a[shape.m - 1], a[shape.m])) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!skipped_pair(shape, i, j) && L.meet(a[i], a[j]) != u) return false;
  return true;
}

LambdaHom hom_from_lambda(const FinLattice& L, const LambdaConfig& config) {
  if (!lambda_holds(L, config))
    throw PreconditionError("generators do not satisfy the Lambda predicate for " +
                            config.shape.to_string());
  CoLattice source = lambda_source(config.shape);
  LatticeMap map;
  map.values.resize(source.lattice.size());
  for (std::size_t x = 0; x < source.lattice.size(); ++x) {
    Elem value = config.base;
    for (std::size_t i = 0; i < config.generators.size(); ++i)
      if (source.sets[x].contains(i)) value = L.join(value, config.generators[i]);
    map.values[x] = value;
  }
  if (!preserves_operations(source.lattice, L, map))
    throw PreconditionError("induced map is not a lattice homomorphism; is the lattice in SUB(LO)?");
  return LambdaHom{std::move(source), std::move(map)};
}

std::vector<Elem> least_preimages(const FinLattice& lp, const FinLattice& target,
                                  const LatticeMap& pi) {
  if (pi.size() != lp.size()) throw InputError("map size does not match the source lattice");
  std::vector<std::optional<Elem>> least(target.size());
  for (std::size_t x = 0; x < lp.size(); ++x) {
    const Elem y = pi.values[x];
    if (y >= target.size()) throw InputError("map value out of range");
    least[y] = least[y] ? lp.meet(*least[y], static_cast<Elem>(x)) : static_cast<Elem>(x);
  }
  std::vector<Elem> out;
  for (std::size_t y = 0; y < target.size(); ++y) {
    if (!least[y]) throw InputError("map is not surjective");
    out.push_back(*least[y]);
  }
  return out;
}

Retraction retract_section(const FinLattice& lp, const LatticeMap& pi, const LambdaShape& shape) {
  const CoLattice target = lambda_source(shape);
  const FinLattice& T = target.lattice;
  const std::vector<Elem> beta = least_preimages(lp, T, pi);
  if (!preserves_operations(lp, T, pi)) throw InputError("map is not a lattice homomorphism");

  const std::vector<Elem> gens = lambda_source_generators(shape, target);
  std::vector<Elem> a;
  for (Elem g : gens) a.push_back(beta[g]);

  Retraction result;
  for (;;) {
    if (!chain_inequalities(lp, a))
      throw PreconditionError("a_k <= a_i v a_j fails at iteration " +
                              std::to_string(result.iterations));
    Elem b = lp.bottom();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (!skipped_pair(shape, i, j)) b = lp.join(b, lp.meet(a[i], a[j]));
    std::vector<Elem> next;
    for (Elem x : a) next.push_back(lp.join(x, b));
    if (next == a) break;
    a = std::move(next);
    if (++result.iterations > lp.size())
      throw PreconditionError("generator iteration did not settle within |Lp| steps");
  }

  LambdaConfig config{shape, a, 0};
  if (shape.kind == LambdaShape::Kind::plain)
    config.base = shape.n == 1 ? beta[T.bottom()] : lp.meet(a[0], a[1]);
  else
    config.base = lp.meet(a[0], a[2]);
  if (!lambda_holds(lp, config))
    throw PreconditionError("settled generators fail the Lambda predicate");
  LambdaHom hom = hom_from_lambda(lp, config);
  if (compose(hom.map, pi) != identity_map(T.size()))
    throw IntegrityError("section does not compose with the projection to the identity");
  result.section = std::move(hom.map);
  result.generators = std::move(a);
  return result;
}

}  // namespace colat
