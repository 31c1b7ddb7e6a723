#pragma once

#include <array>
#include <vector>

#include "series.hpp"

namespace mirsym {

// Linear differential operator written as sum_m z^{z_power_m} P_m(theta)
// with theta = z d/dz and P_m polynomials with rational coefficients.
struct ThetaOperator {
    struct Term {
        int z_power;
        std::vector<Rational> theta_poly;  // theta_poly[i] multiplies theta^i
    };
    std::vector<Term> terms;
    // Marks the operator that arose from d/dz((1-z)/z theta^3 psi) = 0 by
    // clearing the outer d/dz; frobenius_family treats it specially.
    bool factored_am = false;

    // Indicial polynomial: the z_power = 0 part (coefficients in theta).
    std::vector<Rational> indicial_poly() const;
    LogSeries apply(const LogSeries& s) const;
};

// theta^4 - 5z(5theta+1)(5theta+2)(5theta+3)(5theta+4), fully expanded.
ThetaOperator quintic_operator();

// The operator annihilating {1, log z, (log z)^2/2, Li_3(z)}: the degree-4
// form theta^3(theta - 1) - z theta^4 obtained from the factored equation
// d/dz((1-z)/z (z d/dz)^3 psi) = 0, with factored_am set.
ThetaOperator am_operator();

// Rational polynomials in a nilpotent eps with eps^4 = 0.
struct EpsPoly {
    std::array<Rational, 4> c{};  // c[k] multiplies eps^k

    static EpsPoly constant(const Rational& r);
    static EpsPoly linear(const Rational& a, const Rational& b);  // a + b*eps
    EpsPoly operator*(const EpsPoly& o) const;
    EpsPoly operator+(const EpsPoly& o) const;
    EpsPoly operator-() const;
    // Multiplicative inverse mod eps^4; requires nonzero constant term.
    EpsPoly inverse() const;
    bool is_zero() const;
};

// Frobenius data: the eps-expansion sum_n a_n(eps) z^{n+eps} and the four
// extracted solutions psi_0..psi_3 (as series in z and L = log z).
struct FrobeniusFamily {
    int order = 0;
    std::vector<EpsPoly> a_coeffs;      // a_coeffs[n] = a_n(eps); empty for the AM family
    std::array<LogSeries, 4> psi;

    FrobeniusFamily() : psi{LogSeries(0), LogSeries(0), LogSeries(0), LogSeries(0)} {}
};

// Solves op(psi) = 0 by the Frobenius ansatz around the maximally unipotent
// point. Requires indicial polynomial exactly theta^4 (NotMaximallyUnipotent
// otherwise), except for the flagged AM operator, whose family is built from
// the factored form: integration constant 0 gives the theta^3 kernel
// {1, L, L^2/2}, constant 1 gives Li_3.
FrobeniusFamily frobenius_family(const ThetaOperator& op, int order);

// Applies op to s and hands back the residual; callers assert it vanishes
// through the valid truncation order.
LogSeries verify_annihilation(const ThetaOperator& op, const LogSeries& s);

// Truncation of Li_3(z) = sum_{d>=1} z^d / d^3.
TruncatedSeries li3_series(int order);

}  // namespace mirsym
