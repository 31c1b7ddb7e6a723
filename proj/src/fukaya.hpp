#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace mirsym {

// Closed geodesic on the square torus R^2/Z^2: the image of the line
// q x - p y = offset (mod 1) with primitive slope pair (p, q), carrying a
// grading lift index (choice of lift of the tangent-line phase).
struct Geodesic {
    int p = 1, q = 0;
    Rational offset;
    int lift = 0;

    Geodesic() = default;
    Geodesic(int p_, int q_, Rational offset_, int lift_ = 0);
};

// Exact comparison of tangent angles in [0, pi). Equal-angle pairs are the
// non-transverse ones.
bool angle_less(const Geodesic& a, const Geodesic& b);
bool parallel(const Geodesic& a, const Geodesic& b);

// Maslov index of every point of L1 cap L2 (flat geodesics share one index
// across points): lift difference plus the angle-ceiling term; satisfies
// mu(L1,L2) + mu(L2,L1) = 1.
int maslov_index(const Geodesic& l1, const Geodesic& l2);

struct HomBasis {
    std::vector<std::pair<Rational, Rational>> points;  // coordinates in [0,1)^2
    std::vector<int> gradings;
};

// The |p1 q2 - p2 q1| transversal intersection points, sorted, withgradings.
HomBasis intersection_basis(const Geodesic& l1, const Geodesic& l2);

// Gaussian progression data: the summand is exp(-(a n + b)^2), a != 0.
struct ThetaSum {
    double a = 0.0;
    double b = 0.0;
};

struct ThetaValue {
    double value = 0.0;
    double bound = 0.0;  // certified tail bound of the truncation
};

// sum over n in Z of exp(-(a n + b)^2), truncated once the Gaussian tail
// bound drops below tol.
ThetaValue theta_sum(double a, double b, double tol);
inline ThetaValue theta_sum(const ThetaSum& t, double tol) { return theta_sum(t.a, t.b, tol); }

// One structure constant of m_2: a Gaussian progression exp(-(a n + b)^2)
// when triangles exist, zero otherwise.
struct M2Entry {
    bool has_triangles = false;
    double a = 0.0, b = 0.0;  // progression parameters
    double value = 0.0;
    double bound = 0.0;
};

struct M2Tensor {
    int n12 = 0, n23 = 0, n13 = 0;
    std::vector<M2Entry> entries;  // [i1][i2][i3] row-major

    const M2Entry& at(int i1, int i2, int i3) const {
        return entries[static_cast<size_t>((i1 * n23 + i2) * n13 + i3)];
    }
};

// Structure constants of the composition Hom(L1,L2) x Hom(L2,L3) ->
// Hom(L1,L3): for each triple of intersection points, the lattice classes of
// triangles with sides on the three line families form one arithmetic
// progression; the weight sum is the Gaussian theta series of that
// progression with exponent scaled by area_scale (= total symplectic area of
// the torus; the weight of a triangle is exp(-area_scale * euclidean area)).
// Triangles exist only when the slope angles of the chain are in decreasing
// cyclic order; otherwise the tensor vanishes identically.
M2Tensor m2_constants(const Geodesic& l1, const Geodesic& l2, const Geodesic& l3,
                      double area_scale, double tol);

struct AssociativityResult {
    double max_residual = 0.0;
    double bound = 0.0;     // combined error bound of the residual entries
    bool lhs_nonzero = false;
    bool rhs_nonzero = false;
};

// max over basis tuples of |m2(m2(p1,p2),p3) - m2(p1,m2(p2,p3))| with per-sum
// tolerance tol. Vanishes (up to tolerance) by the theta-function bilinear
// identity when the four slopes are angularly ordered so every chain carries
// triangles.
AssociativityResult associativity_residual(const Geodesic& l1, const Geodesic& l2,
                                           const Geodesic& l3, const Geodesic& l4,
                                           double area_scale, double tol);

}  // namespace mirsym
