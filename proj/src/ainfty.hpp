#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mirsym {

// Sparse vector over a basis, kept sorted by index with no zero entries.
using SparseElem = std::vector<std::pair<int, Rational>>;

void sparse_add(SparseElem& target, int idx, const Rational& c);
void sparse_add_scaled(SparseElem& target, const SparseElem& v, const Rational& c);

struct GradedBasisElement {
    std::string name;
    int degree = 0;
    int src = 0;  // object indices
    int dst = 0;
};

// Finite A-infinity category presented by structure coefficients of the
// operations m_k on a chosen basis of every hom space. A one-object
// instance is an A-infinity algebra (AInftyStructure below).
//
// Sign conventions live in the suspended picture: with s-degree = degree - 1,
//   b_k(x_1..x_k) = (-1)^{sum_i (k-i) sdeg(x_i)} m_k(x_1..x_k),
// the Stasheff identities read sum b(1^r x b_s x 1^t) = 0 with only Koszul
// signs, and the coderivation assembled from the b_k squares to zero.
class AInftyCategory {
public:
    std::vector<std::string> objects;
    std::vector<GradedBasisElement> basis;
    // identity element per object (possibly a combination), empty when absent
    std::vector<SparseElem> identities;
    // ops[k] maps a composable k-tuple of basis indices to m_k of the tuple
    std::map<int, std::map<std::vector<int>, SparseElem>> ops;

    int max_arity() const;
    int find_basis(const std::string& name) const;  // -1 when missing
    bool composable(const std::vector<int>& tuple) const;
    std::vector<int> hom_basis(int src, int dst) const;
    bool has_identities() const;

    // m_k evaluated on a basis tuple.
    SparseElem apply_m(int k, const std::vector<int>& tuple) const;
    // b_k = suspended operation (see above).
    SparseElem apply_b(int k, const std::vector<int>& tuple) const;

    // Validates degree rules (deg m_k = 2 - k on every structure constant),
    // composability of stored tuples, identity shape; InvalidArgument on
    // violation.
    void validate() const;

    // Strict unit axioms: m_2(id, f) = f = m_2(f, id), units vanish inside
    // m_k for k != 2, and m_1(id) = 0.
    bool units_strict(std::string* why = nullptr) const;
};

// A-infinity algebra: the one-object case.
struct AInftyStructure {
    std::vector<std::pair<std::string, int>> space;  // (name, degree)
    std::map<int, std::map<std::vector<int>, SparseElem>> ops;

    AInftyCategory as_category() const;
    static AInftyStructure from_category(const AInftyCategory& c);
};

struct StasheffResidual {
    int arity = 0;
    std::vector<int> args;
    SparseElem value;
};

// Evaluates every Stasheff identity on every composable basis tuple with
// arity <= up_to_arity; returns the nonzero residuals.
std::vector<StasheffResidual> stasheff_check(const AInftyCategory& c, int up_to_arity);

struct CoderivationResidual {
    std::vector<int> in;   // input tensor word (basis indices)
    std::vector<int> out;  // output tensor word
    Rational coeff;
};

// Assembles the coderivation on tensor words of length <= max_len from the
// b_k and squares it; returns the nonzero matrix entries of D^2.
std::vector<CoderivationResidual> coderivation_square(const AInftyCategory& c, int max_len);

// One-sided twisted complex over c: finitely many entries X^(index)[shift]
// with strictly upper-triangular differential components.
struct TwistedComplex {
    struct Entry {
        int index = 0;
        int object = 0;
        int shift = 0;
    };
    std::string name = "T";
    std::vector<Entry> entries;                       // strictly increasing index
    std::map<std::pair<int, int>, SparseElem> diffs;  // (index_from, index_to) -> element

    const Entry* entry_at(int index) const;
};

// Generalized Maurer-Cartan residual per (i, j): the sum over all index
// chains i = i_0 < ... < i_k = j of b_k(d_{i0 i1}, ..., d_{i_{k-1} i_k}),
// evaluated in the suspended convention.
std::map<std::pair<int, int>, SparseElem> mc_check(const TwistedComplex& t,
                                                   const AInftyCategory& c);

// The A-infinity category of the given one-sided twisted complexes: homs are
// component morphisms with Tw-degree deg_C + (j - i) + shift offsets, and
// compositions sum over all insertions of the differentials. Inputs must
// satisfy Maurer-Cartan (MaurerCartanViolated) and carry degree-1
// differentials. Compositions are materialized up to arity_budget.
AInftyCategory twisted_complex_category(const AInftyCategory& c,
                                        const std::vector<TwistedComplex>& complexes,
                                        int arity_budget);

// H(C): degree-0 morphisms Ker(m_1)/Im(m_1) with the m_2-induced composition.
struct CohomologyCategory {
    std::vector<std::string> objects;
    // per (src, dst): representative cocycles of a basis of H^0
    std::vector<std::vector<std::vector<SparseElem>>> representatives;
    // composition[src][mid][dst]: table [i][j] -> coefficients over the
    // representatives of (src, dst)
    std::map<std::array<int, 3>, std::vector<std::vector<std::vector<Rational>>>> composition;
    bool associative = false;
    bool identities_ok = false;

    int hom_dim(int src, int dst) const {
        return static_cast<int>(representatives[static_cast<size_t>(src)][static_cast<size_t>(dst)].size());
    }
};

CohomologyCategory cohomology_category(const AInftyCategory& c);

// Gauge transport: conjugates the coderivation by a coalgebra automorphism
// with identity linear part and random higher components; the result is an
// A-infinity structure on the same graded space (D'^2 = F^-1 D^2 F = 0),
// generically with nonzero m_3. One-object categories only. The operations
// are materialized exactly through max_arity; a transported structure
// generally has nonzero operations in every arity, so identity checks on the
// result are meaningful through max_arity and no further.
AInftyCategory gauge_transport(const AInftyCategory& c, unsigned seed, int max_arity);

// JSON import/export (schema documented in the README).
AInftyCategory ainfty_from_json(const std::string& text);
std::string ainfty_to_json(const AInftyCategory& c);
TwistedComplex twisted_from_json(const std::string& text, const AInftyCategory& c);

}  // namespace mirsym
