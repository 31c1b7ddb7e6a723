#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace mirsym {

// Dense exact linear algebra over Rational, sized for the small systems in
// this project (quasimodular fits, cohomology of finite hom complexes).
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<Rational> a;  // row-major

    Matrix() = default;
    Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}
    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> rref(Matrix& m);

size_t rank(Matrix m);

// Solves A x = b exactly. Empty optional if inconsistent; if the system is
// underdetermined the free variables are set to zero.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b,
                                           bool* unique = nullptr);

// Basis of the null space of A.
std::vector<std::vector<Rational>> kernel_basis(Matrix a);

}  // namespace mirsym
