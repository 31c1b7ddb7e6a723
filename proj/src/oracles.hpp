#pragma once

#include <cstdint>

#include "rational.hpp"

namespace mirsym {

// Number of lines on a generic quintic hypersurface in P^4, computed by
// Schubert calculus on the Grassmannian G(2,5): the top Chern number of the
// rank-6 bundle Sym^5 S* evaluated by Pieri multiplication in the two-row
// Schubert basis. Independent of the period/mirror pipeline.
mpz_class schubert_lines_on_quintic();

// Number of conics through 5 generic rational points in the plane: the rank
// of the 5x6 evaluation matrix of conic monomials is computed exactly; a
// full-rank sample yields a one-dimensional linear system, i.e. one conic.
// Degenerate samples are redrawn. Returns the count (1).
mpz_class conics_through_five_points(uint32_t seed);

}  // namespace mirsym
