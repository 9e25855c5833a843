#pragma once

#include "colat/builtin.hpp"
#include "colat/catalog.hpp"
#include "colat/congruence.hpp"
#include "colat/corpus.hpp"
#include "colat/dependency.hpp"
#include "colat/dot.hpp"
#include "colat/error.hpp"
#include "colat/homomorphism.hpp"
#include "colat/identity_check.hpp"
#include "colat/json_io.hpp"
#include "colat/lattice.hpp"
#include "colat/membership.hpp"
#include "colat/parallel.hpp"
#include "colat/poset.hpp"
#include "colat/projectivity.hpp"
#include "colat/sigma.hpp"
#include "colat/star.hpp"
#include "colat/term.hpp"
#include "colat/tracks.hpp"
