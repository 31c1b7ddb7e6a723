#pragma once

#include "ainfty.hpp"

namespace mirsym {
namespace fixtures {

// Dual numbers Q[e]/e^2 in degree 0: unital associative, m_1 = 0.
AInftyCategory dual_numbers();

// Exterior algebra on one degree-1 generator: 1, t with t^2 = 0.
AInftyCategory exterior_line();

// Three-dimensional dg-algebra 1, x (deg 0), y (deg 1) with dx = y and all
// products of non-units zero; H^* is the ground field.
AInftyCategory acyclic_dg();

// Two objects X, Y with an acyclic hom complex Hom(X, Y): u (deg 0), v (deg
// -1), w (deg 1) with m_1(v) = u, m_1(u) = w; identities on X and Y.
AInftyCategory two_object_acyclic_hom();

// One-object dg-category with End = Q (so twisted complexes are complexes of
// "free modules" with scalar differentials).
AInftyCategory ground_field();

// Perturbs one m_2 structure constant of the input (adds delta to the
// coefficient of the first stored op of arity 2).
AInftyCategory perturb_m2(const AInftyCategory& c, const Rational& delta);

}  // namespace fixtures
}  // namespace mirsym
