#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "colat/homomorphism.hpp"
#include "colat/lattice.hpp"
#include "colat/poset.hpp"

namespace colat {

/// plain(n) stands for Co(n-chain) with generators {0}, ..., {n-1};
/// split(m, n) for L_{m,n} with generators {i} (i != m) and c_m in slot m.
struct LambdaShape {
  enum class Kind { plain, split };
  Kind kind = Kind::plain;
  std::size_t m = 0;  // split only
  std::size_t n = 0;

  static LambdaShape plain(std::size_t n) { return {Kind::plain, 0, n}; }
  static LambdaShape split(std::size_t m, std::size_t n) { return {Kind::split, m, n}; }

  std::size_t generator_count() const { return kind == Kind::plain ? n : m + n + 1; }
  std::string to_string() const;
  friend bool operator==(const LambdaShape&, const LambdaShape&) = default;
};

/// Parses "co:3" or "lmn:1,2".
LambdaShape parse_lambda_shape(std::string_view text);

/// The lattice the shape stands for, and the generator elements in it.
CoLattice lambda_source(const LambdaShape& shape);
std::vector<Elem> lambda_source_generators(const LambdaShape& shape, const CoLattice& source);

struct LambdaConfig {
  LambdaShape shape;
  std::vector<Elem> generators;
  /// Image of the empty set.
  Elem base = 0;
};

/// Evaluates every clause of the shape's Lambda predicate, including that
/// base is the prescribed pairwise meet (for plain(1), that base <= a_0).
/// Throws InputError when the generator count does not match.
bool lambda_holds(const FinLattice& lattice, const LambdaConfig& config);

struct LambdaHom {
  CoLattice source;
  LatticeMap map;
};

/// phi(X) = base v join of a_i over i in X. Throws PreconditionError if the
/// predicate fails or phi does not preserve join and meet.
LambdaHom hom_from_lambda(const FinLattice& lattice, const LambdaConfig& config);

struct Retraction {
  LatticeMap section;  // target -> Lp
  std::vector<Elem> generators;
  std::size_t iterations = 0;
};

/// Least element of pi^-1{x} for every target element x.
std::vector<Elem> least_preimages(const FinLattice& lp, const FinLattice& target,
                                  const LatticeMap& pi);

/// Section phi of pi built by the fixpoint a_i <- a_i v b, b = join of
/// pairwise meets a_i ^ a_j (skipping {m-1, m} for split shapes), started
/// from least preimages of the generators. Throws InputError if pi is not a
/// surjective homomorphism and PreconditionError if the iteration does not
/// settle within |Lp| steps or the result fails the Lambda predicate.
Retraction retract_section(const FinLattice& lp, const LatticeMap& pi, const LambdaShape& shape);

}  // namespace colat
