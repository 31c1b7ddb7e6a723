#pragma once

#include <array>
#include <map>
#include <vector>

#include "rational.hpp"

namespace mirsym {

// Polynomials in x0, x1, x2 and the grading variable q1 = e^{x1}, truncated
// in q1-degree. x1 enters both polynomially (classical cubic term) and
// through q1; the x1-partial accounts for both.
class ExpPoly {
public:
    using Mono = std::array<int, 4>;  // exponents of x0, x1, x2, q1

    explicit ExpPoly(int q_max) : q_max_(q_max) {}

    int q_max() const { return q_max_; }
    const std::map<Mono, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Mono& m, const Rational& c);
    Rational coeff(const Mono& m) const;

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly operator*(const Rational& s) const;

    // d/dx_i for i in {0,1,2}; i = 1 also differentiates q1 = e^{x1}.
    ExpPoly partial(int i) const;

    // Substitutes rational values for x0 and x2, leaving a polynomial in q1.
    // Requires every term to be x1-free (true for all third partials here).
    std::vector<Rational> eval_q1_poly(const Rational& x0, const Rational& x2) const;

private:
    int q_max_;
    std::map<Mono, Rational> t_;
};

// Poincare pairing in the basis (1, hyperplane, point): anti-diagonal with
// unit entries, its own inverse.
struct PairingMatrix {
    std::array<std::array<Rational, 3>, 3> g{};
    std::array<std::array<Rational, 3>, 3> g_inv{};
};

PairingMatrix plane_pairing();

// Pre-potential of the plane: (x0^2 x2 + x0 x1^2)/2 plus
// sum_d N_d q1^d x2^{3d-1}/(3d-1)! through q1-degree q_max.
struct PlanePotential {
    int q_max = 0;
    std::vector<Rational> counts;  // counts[d-1] = N_d
    ExpPoly phi;

    PlanePotential() : phi(0) {}
};

PlanePotential plane_potential(const std::vector<Rational>& counts, int q_max);

// Structure constants A_ij^k = sum_k' g^{kk'} d_i d_j d_k' Phi of the quantum
// product, evaluated at (x0, x2) with q1 kept formal: entry [i][j][k] is the
// q1-polynomial coefficient list (length q_max+1).
using StructureConstants = std::array<std::array<std::array<std::vector<Rational>, 3>, 3>, 3>;
StructureConstants structure_constants(const PlanePotential& pot, const Rational& x0,
                                       const Rational& x2);

// Left-minus-right side of the associativity equation for indices (i,j,k,l),
// expanded exactly through q1-degree deg (TruncationExceeded if deg exceeds
// the potential's truncation).
ExpPoly wdvv_residual(const PlanePotential& pot, int i, int j, int k, int l, int deg);

// N_1 = 1; N_d for d >= 2 from the quadratic recursion the associativity
// equation forces on the potential coefficients.
std::vector<Rational> plane_curve_recursion(int dmax);

}  // namespace mirsym
