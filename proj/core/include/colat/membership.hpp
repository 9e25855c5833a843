#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "colat/dependency.hpp"
#include "colat/lattice.hpp"
#include "colat/sigma.hpp"

namespace colat {

/// A total order on J_a(L) for the anchor a.
struct ChainOrderWitness {
  Elem anchor = 0;
  std::vector<Elem> chain;

  friend bool operator==(const ChainOrderWitness&, const ChainOrderWitness&) = default;
};

/// One factor of an embedding certificate: the chain order and, for every
/// lattice element x, the image {b in chain : b <= x} (ascending indices).
struct CertificateComponent {
  Elem anchor = 0;
  std::vector<Elem> chain;
  std::vector<std::vector<Elem>> images;

  friend bool operator==(const CertificateComponent&, const CertificateComponent&) = default;
};

struct EmbeddingCertificate {
  std::vector<CertificateComponent> components;

  std::size_t total_chain_length() const;
  friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;
};

/// Searches for a total order of J_a(L) under which x -> {b : b <= x} is a
/// lattice homomorphism into the convex sets of the chain. A two-sided seed
/// built from the graph {x, y : a <= x v y} on rd(a) is tried first; the
/// fallback is exhaustive backtracking. Deterministic.
std::optional<ChainOrderWitness> chain_order(const DependencyData& data, Elem anchor);
std::optional<ChainOrderWitness> chain_order(const FinLattice& lattice, Elem anchor);

/// True iff `chain` lists J_a(L) and induces a homomorphism as above.
bool valid_chain_order(const DependencyData& data, const ChainOrderWitness& witness);

CertificateComponent make_component(const FinLattice& lattice,
                                    const ChainOrderWitness& witness);

struct MembershipResult {
  bool accepted = false;
  EmbeddingCertificate certificate;
  /// Least anchor without a chain order, when rejected.
  std::optional<Elem> failing_anchor;
  /// First failing join-irreducible condition, if any of E, P, HS fails.
  std::optional<SigmaCondition> failing_condition;
  std::optional<SigmaResult> sigma_witness;
  std::vector<std::string> diagnostics;
};

/// Membership in SUB(LO). Anchors are processed in parallel; the result does
/// not depend on the worker count.
MembershipResult decide_sub_lo(const FinLattice& lattice, unsigned workers = 1);

/// Largest |J_a(L)| over all join-irreducibles a (0 for the trivial lattice).
std::size_t max_ja_size(const FinLattice& lattice);

/// Accepted into SUB(LO) with every |J_a(L)| <= n.
bool decide_sub_n(const FinLattice& lattice, std::size_t n, unsigned workers = 1);

/// Checks that the components cover each join-irreducible once, that each
/// chain lists J_a(L), that each component map is a homomorphism into the
/// convex sets of its chain, that the product map is injective, and that the
/// total chain length is at most |J(L)|^2.
bool verify_certificate(const FinLattice& lattice, const EmbeddingCertificate& certificate,
                        std::string* reason = nullptr);

inline constexpr std::size_t kOracleMaxSize = 8;

/// Independent decision: for every join-irreducible j and element y with
/// j not below y, search a homomorphism into Co(k-chain), k = |J(L)|, that
/// keeps the image of j outside the image of y. Throws SizeGuardError above
/// kOracleMaxSize elements.
bool brute_force_oracle(const FinLattice& lattice, unsigned workers = 1);

}  // namespace colat
