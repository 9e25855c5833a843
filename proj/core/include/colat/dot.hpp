#pragma once

#include <string>

#include "colat/lattice.hpp"
#include "colat/poset.hpp"

namespace colat {

/// Hasse diagram in Graphviz syntax, bottom to top. Output depends only on
/// the input.
std::string export_dot(const FinLattice& lattice);
std::string export_dot(const Poset& poset);

}  // namespace colat
