#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "fukaya.hpp"

using namespace mirsym;

TEST_CASE("geodesic construction") {
    CHECK_THROWS_AS(Geodesic(2, 4, Rational(0)), Error);  // not coprime
    Geodesic g(1, 2, Rational(7, 3));
    CHECK(g.offset == Rational(1, 3));  // reduced mod 1
}

TEST_CASE("intersection counts: axis pair and a determinant-2 pair") {
    Geodesic h(1, 0, Rational(0)), v(0, 1, Rational(0));
    HomBasis b = intersection_basis(h, v);
    REQUIRE(b.points.size() == 1);
    CHECK(b.points[0].first == Rational(0));
    CHECK(b.points[0].second == Rational(0));

    Geodesic s(1, 2, Rational(0));
    CHECK(intersection_basis(h, s).points.size() == 2);

    CHECK_THROWS_AS(intersection_basis(h, Geodesic(1, 0, Rational(1, 2))), NotTransverse);
}

TEST_CASE("intersection counts equal slope determinants on random pairs") {
    std::mt19937 rng(777u);
    std::uniform_int_distribution<int> pick(-7, 7);
    int tested = 0;
    while (tested < 20) {
        int p1 = pick(rng), q1 = pick(rng), p2 = pick(rng), q2 = pick(rng);
        if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
        if (std::gcd(std::abs(p1), std::abs(q1)) != 1) continue;
        if (std::gcd(std::abs(p2), std::abs(q2)) != 1) continue;
        long det = static_cast<long>(p1) * q2 - static_cast<long>(p2) * q1;
        if (det == 0) continue;
        Geodesic a(p1, q1, Rational(1, 5)), b(p2, q2, Rational(2, 7));
        CHECK(static_cast<long>(intersection_basis(a, b).points.size()) == std::labs(det));
        ++tested;
    }
}

TEST_CASE("grading complementarity at every point") {
    std::mt19937 rng(778u);
    std::uniform_int_distribution<int> pick(-5, 5);
    std::uniform_int_distribution<int> lift(-2, 2);
    int tested = 0;
    while (tested < 12) {
        int p1 = pick(rng), q1 = pick(rng), p2 = pick(rng), q2 = pick(rng);
        if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
        if (std::gcd(std::abs(p1), std::abs(q1)) != 1) continue;
        if (std::gcd(std::abs(p2), std::abs(q2)) != 1) continue;
        if (static_cast<long>(p1) * q2 - static_cast<long>(p2) * q1 == 0) continue;
        Geodesic a(p1, q1, Rational(0), lift(rng)), b(p2, q2, Rational(1, 3), lift(rng));
        CHECK(maslov_index(a, b) + maslov_index(b, a) == 1);
        HomBasis ab = intersection_basis(a, b);
        HomBasis ba = intersection_basis(b, a);
        for (size_t i = 0; i < ab.points.size(); ++i)
            CHECK(ab.gradings[i] + ba.gradings[i] == 1);
        ++tested;
    }
}

TEST_CASE("theta sum basics and invariances") {
    // t(a, 0) >= 1: the n = 0 term alone contributes 1
    CHECK(theta_sum(2.0, 0.0, 1e-12).value >= 1.0);

    ThetaValue t1 = theta_sum(1.5, 0.3, 1e-13);
    ThetaValue shift = theta_sum(1.5, 0.3 + 1.5, 1e-13);
    ThetaValue refl = theta_sum(1.5, -0.3, 1e-13);
    CHECK(std::fabs(t1.value - shift.value) <= t1.bound + shift.bound + 1e-15);
    CHECK(std::fabs(t1.value - refl.value) <= t1.bound + refl.bound + 1e-15);

    // recomputation at tol/10 moves the value by less than the reported bound
    ThetaValue coarse = theta_sum(0.8, 0.25, 1e-9);
    ThetaValue fine = theta_sum(0.8, 0.25, 1e-10);
    CHECK(std::fabs(coarse.value - fine.value) <= coarse.bound);

    CHECK_THROWS_AS(theta_sum(0.0, 0.1, 1e-12), Error);
    CHECK_THROWS_AS(theta_sum(1.0, 0.1, 0.0), Error);
}

TEST_CASE("m2 entries are theta values of the derived progressions") {
    Geodesic l1(1, 0, Rational(0)), l2(0, 1, Rational(0)), l3(1, 1, Rational(1, 2));
    M2Tensor t = m2_constants(l1, l2, l3, 1.0, 1e-12);
    REQUIRE(t.n12 == 1);
    REQUIRE(t.n23 == 1);
    REQUIRE(t.n13 == 1);
    const M2Entry& e = t.at(0, 0, 0);
    REQUIRE(e.has_triangles);
    ThetaValue direct = theta_sum(e.a, e.b, 1e-12);
    CHECK(e.value == direct.value);
    CHECK(e.value > 0.0);
}

TEST_CASE("scaling the symplectic form scales the progression by sqrt(c)") {
    Geodesic l1(1, 0, Rational(0)), l2(0, 1, Rational(1, 3)), l3(1, 1, Rational(1, 2));
    double c = 2.25;
    M2Tensor t1 = m2_constants(l1, l2, l3, 1.0, 1e-13);
    M2Tensor t2 = m2_constants(l1, l2, l3, c, 1e-13);
    for (size_t i = 0; i < t1.entries.size(); ++i) {
        if (!t1.entries[i].has_triangles) {
            CHECK(!t2.entries[i].has_triangles);
            continue;
        }
        CHECK(t2.entries[i].a == doctest::Approx(t1.entries[i].a * std::sqrt(c)).epsilon(1e-12));
        CHECK(t2.entries[i].b == doctest::Approx(t1.entries[i].b * std::sqrt(c)).epsilon(1e-12));
        // and the scaled entry is the theta sum of the scaled progression
        ThetaValue direct = theta_sum(t1.entries[i].a * std::sqrt(c),
                                      t1.entries[i].b * std::sqrt(c), 1e-13);
        CHECK(t2.entries[i].value == doctest::Approx(direct.value).epsilon(1e-12));
    }
}

TEST_CASE("entries are invariant under integer offset translation") {
    Geodesic a1(1, 0, Rational(0)), a2(0, 1, Rational(1, 3)), a3(1, 1, Rational(1, 2));
    Geodesic b1(1, 0, Rational(3)), b2(0, 1, Rational(1, 3) + Rational(2)),
        b3(1, 1, Rational(1, 2) - Rational(4));
    M2Tensor ta = m2_constants(a1, a2, a3, 1.0, 1e-12);
    M2Tensor tb = m2_constants(b1, b2, b3, 1.0, 1e-12);
    REQUIRE(ta.entries.size() == tb.entries.size());
    for (size_t i = 0; i < ta.entries.size(); ++i)
        CHECK(ta.entries[i].value == tb.entries[i].value);
}

TEST_CASE("composition gradings are compatible exactly when triangles exist") {
    Geodesic l1(1, -1, Rational(0)), l2(0, 1, Rational(0)), l3(1, 1, Rational(1, 2));
    // decreasing angles: triangles exist and mu is additive
    M2Tensor t = m2_constants(l1, l2, l3, 1.0, 1e-12);
    bool any = false;
    for (const auto& e : t.entries) any |= e.has_triangles;
    CHECK(any);
    CHECK(maslov_index(l1, l2) + maslov_index(l2, l3) == maslov_index(l1, l3));

    // reversed chain: no triangles, and the composition would drop degree
    M2Tensor rev = m2_constants(l3, l2, l1, 1.0, 1e-12);
    for (const auto& e : rev.entries) CHECK(!e.has_triangles);
    CHECK(maslov_index(l3, l2) + maslov_index(l2, l1) != maslov_index(l3, l1));
}

TEST_CASE("associativity residual for the standard four-line configuration") {
    Geodesic l1(1, -1, Rational(0)), l2(0, 1, Rational(0)), l3(1, 1, Rational(1, 2)),
        l4(1, 0, Rational(1, 4));
    AssociativityResult r = associativity_residual(l1, l2, l3, l4, 1.0, 1e-12);
    CHECK(r.lhs_nonzero);
    CHECK(r.rhs_nonzero);
    CHECK(r.max_residual < 1e-9);

    // the residual varies continuously with the area scale: no jumps
    double prev = r.max_residual;
    for (double scale : {1.1, 1.2, 1.3}) {
        AssociativityResult s = associativity_residual(l1, l2, l3, l4, scale, 1e-12);
        CHECK(s.max_residual < 1e-9);
        CHECK(std::fabs(s.max_residual - prev) < 1e-9);
        prev = s.max_residual;
    }

    CHECK_THROWS_AS(
        associativity_residual(l1, l1, l3, l4, 1.0, 1e-12), NotTransverse);
}
