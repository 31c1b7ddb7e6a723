#pragma once

#include <array>
#include <vector>

#include "series.hpp"

namespace mirsym {

// Integer partitions of d, parts weakly decreasing.
std::vector<std::vector<int>> partitions_of(int d);

// f_2(lambda) = sum_i lambda_i (lambda_i - 2i + 1) / 2  (i 1-based): the
// central character of the sum of transpositions.
Rational central_character_f2(const std::vector<int>& lambda);

// sum over |lambda| = d of f_2(lambda)^b: disconnected weighted count of
// degree-d covers of the torus with b labeled simple branch points.
Rational covers_disconnected_weighted(int d, int b);

// Direct enumeration over monodromy tuples (alpha, beta, tau_1..tau_b) with
// [alpha,beta] tau_1...tau_b = id, each tau a transposition, weighted 1/d!.
// The last transposition is forced, so the loop runs over b-1 free taus.
// With connected=true only transitive tuples count. Desk-scale budget:
// d <= 6 for b <= 2, d <= 5 for b <= 4 (BudgetExceeded beyond).
Rational covers_bruteforce(int d, int b, bool connected, int threads = 1);

struct HurwitzSeries {
    int g = 0;
    int dmax = 0;
    std::vector<Rational> coeffs;  // coeffs[i] is the q^{i+1} coefficient

    Rational coeff(int d) const { return coeffs.at(static_cast<size_t>(d - 1)); }
};

// F_g(q): (2g-2)! times the u^{2g-2} coefficient of log sum_lambda
// q^{|lambda|} e^{u f_2(lambda)} — the connected extraction.
HurwitzSeries connected_series(int g, int dmax);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for k in {2,4,6},
// with B_2 = 1/6, B_4 = -1/30, B_6 = 1/42.
TruncatedSeries eisenstein(int k, int order);

struct QmfTerm {
    int a = 0, b = 0, c = 0;  // exponents of E2, E4, E6
    Rational coeff;
};

struct QuasiModularForm {
    int weight = 0;
    std::vector<QmfTerm> terms;
};

// Monomials E2^a E4^b E6^c with 2a + 4b + 6c = weight, lexicographic in
// (a, b, c) descending in a.
std::vector<std::array<int, 3>> qmf_monomials(int weight);

TruncatedSeries qmf_q_expansion(const QuasiModularForm& f, int order);

// Expresses F in the weight-(6g-6) monomial basis: solves the square system
// on the minimal number of coefficients (constant term constrained to 0),
// then validates every remaining computed coefficient exactly. NoSolution if
// validation fails or the system is inconsistent; UnderDetermined if the
// minimal system is singular. Requires dmax >= dim + 3.
QuasiModularForm quasimodular_fit(const HurwitzSeries& f);

}  // namespace mirsym
