#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "colat/homomorphism.hpp"
#include "colat/lattice.hpp"
#include "colat/membership.hpp"
#include "colat/poset.hpp"
#include "colat/term.hpp"
#include "colat/tracks.hpp"

namespace colat {

using Json = nlohmann::json;

/// Raw bytes of a file, or of stdin for "-". Throws InputError if the file
/// cannot be opened.
std::string read_input_text(const std::string& path);

/// Throws InputError for empty or malformed text; `origin` names the source
/// in messages.
Json parse_json_text(const std::string& text, const std::string& origin);

/// Reads a JSON document from a file, or from stdin for "-". Throws
/// InputError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// {"elements": [labels], "covers": [[lower, upper], ...]}
Json poset_to_json(const Poset& poset);
Poset poset_from_json(const Json& json);

/// {"size": n, "leq_pairs": [[i, j], ...], "labels": [...]}. Covering pairs
/// are written; any generating set of pairs is accepted on input.
Json lattice_to_json(const FinLattice& lattice);
FinLattice lattice_from_json(const Json& json);

/// {"name", "vars", "relation": "eq" | "le", "lhs", "rhs"}. Files whose terms
/// are empty are rejected as unfilled placeholders.
Json identity_to_json(const Identity& identity);
Identity identity_from_json(const Json& json);

/// [{"anchor": label, "chain": [labels], "map": [[labels] per element]}]
Json certificate_to_json(const FinLattice& lattice, const EmbeddingCertificate& certificate);
EmbeddingCertificate certificate_from_json(const FinLattice& lattice, const Json& json);

/// {"sigma": {"entries": [...], "side": i}, "tau": {...}}
Json bitrack_to_json(const WeakBiTrack& track);
WeakBiTrack bitrack_from_json(const Json& json);

/// {"values": [...]}
Json map_to_json(const LatticeMap& map);
LatticeMap map_from_json(const Json& json);

}  // namespace colat
