#include "oracles.hpp"

#include <map>
#include <random>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace mirsym {

namespace {

// Schubert classes of G(2,5): partitions (a >= b) inside the 2x3 box.
using SchubertClass = std::map<std::pair<int, int>, mpz_class>;

// Pieri: multiplication by sigma_1 adds one box in every admissible way.
SchubertClass mult_e1(const SchubertClass& c) {
    SchubertClass out;
    for (const auto& [lam, coeff] : c) {
        auto [a, b] = lam;
        if (a + 1 <= 3) out[{a + 1, b}] += coeff;
        if (b + 1 <= a) out[{a, b + 1}] += coeff;
    }
    return out;
}

// Multiplication by sigma_{1,1} = e_2 adds a vertical 2-strip.
SchubertClass mult_e2(const SchubertClass& c) {
    SchubertClass out;
    for (const auto& [lam, coeff] : c) {
        auto [a, b] = lam;
        if (a + 1 <= 3 && b + 1 <= a + 1) out[{a + 1, b + 1}] += coeff;
    }
    return out;
}

}  // namespace

mpz_class schubert_lines_on_quintic() {
    // Chern roots x1, x2 of S*: the top Chern class of Sym^5 S* is
    // prod_{i=0..5} ((5-i) x1 + i x2). Expand in Z[x1, x2] literally.
    std::map<std::pair<int, int>, mpz_class> poly;  // (i, j) -> coeff of x1^i x2^j
    poly[{0, 0}] = 1;
    for (int i = 0; i <= 5; ++i) {
        std::map<std::pair<int, int>, mpz_class> next;
        for (const auto& [mono, coeff] : poly) {
            auto [u, v] = mono;
            if (5 - i != 0) next[{u + 1, v}] += coeff * (5 - i);
            if (i != 0) next[{u, v + 1}] += coeff * i;
        }
        poly = std::move(next);
    }

    // Rewrite the symmetric polynomial in e1 = x1 + x2, e2 = x1 x2 by
    // repeatedly stripping the lead term.
    std::map<std::pair<int, int>, mpz_class> in_e;  // (a, b) -> coeff of e1^a e2^b
    while (!poly.empty()) {
        // lead: highest x1-degree
        auto lead = poly.begin();
        for (auto it = poly.begin(); it != poly.end(); ++it)
            if (it->first.first > lead->first.first ||
                (it->first.first == lead->first.first && it->first.second > lead->first.second))
                lead = it;
        auto [u, v] = lead->first;
        mpz_class c = lead->second;
        if (u < v) throw InternalError("polynomial is not symmetric");
        int a = u - v, b = v;
        in_e[{a, b}] += c;
        // subtract c * e1^a e2^b expanded
        std::map<std::pair<int, int>, mpz_class> term;
        term[{0, 0}] = c;
        for (int s = 0; s < a; ++s) {
            std::map<std::pair<int, int>, mpz_class> next;
            for (const auto& [mono, coeff] : term) {
                next[{mono.first + 1, mono.second}] += coeff;
                next[{mono.first, mono.second + 1}] += coeff;
            }
            term = std::move(next);
        }
        for (int s = 0; s < b; ++s) {
            std::map<std::pair<int, int>, mpz_class> next;
            for (const auto& [mono, coeff] : term)
                next[{mono.first + 1, mono.second + 1}] += coeff;
            term = std::move(next);
        }
        for (const auto& [mono, coeff] : term) {
            poly[mono] -= coeff;
            if (poly[mono] == 0) poly.erase(mono);
        }
    }

    // Evaluate <e1^a e2^b> on G(2,5) by Pieri action on the empty partition,
    // reading off the coefficient of the point class (3,3).
    mpz_class total = 0;
    for (const auto& [mono, coeff] : in_e) {
        auto [a, b] = mono;
        if (a + 2 * b != 6) continue;  // only top-degree terms pair with the point
        SchubertClass cls;
        cls[{0, 0}] = 1;
        for (int s = 0; s < a; ++s) cls = mult_e1(cls);
        for (int s = 0; s < b; ++s) cls = mult_e2(cls);
        auto it = cls.find({3, 3});
        if (it != cls.end()) total += coeff * it->second;
    }
    return total;
}

mpz_class conics_through_five_points(uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coord(-20, 20);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // 5 random affine points, conic monomials (x^2, xy, y^2, x, y, 1).
        Matrix m(5, 6);
        for (size_t i = 0; i < 5; ++i) {
            Rational x(coord(rng)), y(coord(rng));
            m.at(i, 0) = x * x;
            m.at(i, 1) = x * y;
            m.at(i, 2) = y * y;
            m.at(i, 3) = x;
            m.at(i, 4) = y;
            m.at(i, 5) = Rational(1);
        }
        if (rank(m) == 5) {
            // one-dimensional solution space: a unique conic
            return mpz_class(1);
        }
        // degenerate sample (repeated or special-position points): redraw
    }
    throw InternalError("could not draw 5 points in general position");
}

}  // namespace mirsym
