#pragma once

#include <vector>

#include "picard_fuchs.hpp"
#include "series.hpp"

namespace mirsym {

// The coordinate change q = z exp(sigma/psi_0) where psi_1 = L psi_0 + sigma.
struct MirrorMap {
    TruncatedSeries q_of_z;  // q/z, a unit series in z
    TruncatedSeries z_of_q;  // compositional inverse, z as a series in q

    MirrorMap() : q_of_z(0), z_of_q(0) {}

    // q(z) as a plain series in z (zero constant term, unit linear term).
    TruncatedSeries q_series() const { return q_of_z.shifted_up(1); }
};

MirrorMap mirror_map(const FrobeniusFamily& family);

struct InstantonNumbers {
    std::vector<Rational> n_virt;  // index d-1 holds degree d
    std::vector<Rational> n_int;
};

// The triple q d/dq derivative of (5/2)(psi_1 psi_2 - psi_0 psi_3)/psi_0^2
// rewritten in the q variable. Log components must cancel exactly
// (LogTermsSurvive otherwise); the survivor is 5 + sum d^3 n_d^virt q^d.
TruncatedSeries yukawa_coupling_series(const FrobeniusFamily& family, const MirrorMap& map);

// Extracts n_d^virt for d = 1..dmax from the coupling series.
std::vector<Rational> yukawa_extraction(const FrobeniusFamily& family, const MirrorMap& map,
                                        int dmax);

// Solves n_d = n_d^virt - sum_{k|d, k>1} n_{d/k} / k^3 (exact, triangular).
std::vector<Rational> am_inversion(const std::vector<Rational>& n_virt);

// Forward multiple-cover sum: n_d^virt = sum_{k|d} n_{d/k} / k^3.
std::vector<Rational> am_forward(const std::vector<Rational>& n_int);

// The toy model: psi_0 = 1, psi_1 = L, psi_2 = L^2/2, psi_3 = Li_3; checks
// that substituting t = log z into sum_d exp(dt)/d^3 reproduces Li_3(z).
struct AmToyReport {
    int order = 0;
    bool pass = false;
    int first_mismatch = -1;       // z-power of the first differing coefficient
    std::vector<Rational> lhs;     // sum exp(dt)/d^3 coefficients
    std::vector<Rational> rhs;     // Li_3 coefficients
};

AmToyReport am_toy_model(int order);

// Full pipeline at a given truncation order (order >= dmax + 2 guard terms).
struct QuinticRun {
    int dmax = 0;
    int order = 0;
    FrobeniusFamily family;
    MirrorMap map;
    std::vector<Rational> q_coeffs;  // [z^d] q(z) for d = 1..order
    bool q_integral = false;
    TruncatedSeries coupling;        // K(q)
    InstantonNumbers numbers;

    QuinticRun() : coupling(0) {}
};

QuinticRun quintic_pipeline(int dmax, int order = -1);

}  // namespace mirsym
