#include "doctest.h"
#include "errors.hpp"
#include "picard_fuchs.hpp"

using namespace mirsym;

namespace {

// Independent expansion oracle: multiply out -5(5t+1)(5t+2)(5t+3)(5t+4) as a
// bare coefficient vector, with none of the operator machinery.
std::vector<Rational> expand_z_part_oracle() {
    std::vector<Rational> p{Rational(-5)};
    for (int r = 1; r <= 4; ++r) {
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i] * Rational(r);
            q[i + 1] += p[i] * Rational(5);
        }
        p = std::move(q);
    }
    return p;
}

}  // namespace

TEST_CASE("quintic operator structure") {
    ThetaOperator op = quintic_operator();

    // indicial part is theta^4
    std::vector<Rational> ind = op.indicial_poly();
    REQUIRE(ind.size() == 5);
    CHECK(ind[4] == Rational(1));
    for (int i = 0; i < 4; ++i) CHECK(ind[i] == Rational(0));

    // z-part matches the expansion oracle; at theta = 0 it is -120
    const auto* zterm = &op.terms[0];
    if (zterm->z_power != 1) zterm = &op.terms[1];
    REQUIRE(zterm->z_power == 1);
    std::vector<Rational> oracle = expand_z_part_oracle();
    REQUIRE(zterm->theta_poly.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(zterm->theta_poly[i] == oracle[i]);
    CHECK(zterm->theta_poly[0] == Rational(-120));
}

TEST_CASE("frobenius family of the quintic") {
    FrobeniusFamily fam = frobenius_family(quintic_operator(), 8);

    // psi_0 coefficients (5n)!/(n!)^5
    TruncatedSeries psi0 = fam.psi[0].part(0);
    CHECK(psi0.coeff(0) == Rational(1));
    CHECK(psi0.coeff(1) == Rational(120));
    CHECK(psi0.coeff(2) == Rational(113400));
    for (int n = 0; n <= 8; ++n) {
        mpz_class den = factorial(static_cast<unsigned>(n));
        mpz_class d5 = den * den * den * den * den;
        CHECK(psi0.coeff(n) == Rational(factorial(static_cast<unsigned>(5 * n)), d5));
    }

    // psi_1 = L psi_0 + sigma with sigma's z-coefficient 5*120*(1/2+1/3+1/4+1/5)
    CHECK(fam.psi[1].part(1) == psi0);
    CHECK(fam.psi[1].part(0).coeff(1) == Rational(770));

    // annihilation of all four solutions to full order
    ThetaOperator op = quintic_operator();
    for (int i = 0; i < 4; ++i) CHECK(verify_annihilation(op, fam.psi[i]).is_zero());

    // leading log structure: psi_i - L^i/i! psi_0 has log degree <= i-1
    Rational fact(1);
    for (int i = 1; i < 4; ++i) {
        fact *= Rational(i);
        LogSeries lead = LogSeries::log_monomial(fact.inv(), i, 8) * psi0;
        LogSeries rest = fam.psi[i] - lead;
        CHECK(rest.log_degree() <= i - 1);
    }
}

TEST_CASE("operator application detects perturbations") {
    FrobeniusFamily fam = frobenius_family(quintic_operator(), 6);
    TruncatedSeries perturbed = fam.psi[0].part(0);
    perturbed.set_coeff(6, perturbed.coeff(6) + Rational(1));
    CHECK(!verify_annihilation(quintic_operator(), LogSeries(perturbed)).is_zero());
}

TEST_CASE("theta^4 kills the cubic log polynomial") {
    ThetaOperator theta4;
    theta4.terms.push_back({0, {0, 0, 0, 0, Rational(1)}});
    LogSeries cubic = LogSeries::log_monomial(Rational(1, 6), 3, 5);
    CHECK(theta4.apply(cubic).is_zero());
}

TEST_CASE("multiple-cover operator annihilates its four solutions") {
    ThetaOperator op = am_operator();
    CHECK(op.factored_am);

    int order = 12;
    CHECK(op.apply(LogSeries(TruncatedSeries::one(order))).is_zero());
    CHECK(op.apply(LogSeries::log_monomial(Rational(1, 2), 2, 8)).is_zero());
    CHECK(op.apply(LogSeries(li3_series(order))).is_zero());
    CHECK(op.apply(LogSeries::log_monomial(1, 1, order)).is_zero());

    FrobeniusFamily fam = frobenius_family(op, order);
    CHECK(fam.psi[0] == LogSeries(TruncatedSeries::one(order)));
    CHECK(fam.psi[1] == LogSeries::log_monomial(1, 1, order));
    CHECK(fam.psi[2] == LogSeries::log_monomial(Rational(1, 2), 2, order));
    CHECK(fam.psi[3] == LogSeries(li3_series(order)));
    for (int i = 0; i < 4; ++i) CHECK(verify_annihilation(op, fam.psi[i]).is_zero());
}

TEST_CASE("frobenius method rejects non-unipotent operators") {
    ThetaOperator op = am_operator();
    op.factored_am = false;  // the raw operator has indicial theta^3(theta - 1)
    CHECK_THROWS_AS(frobenius_family(op, 4), NotMaximallyUnipotent);
    CHECK_THROWS_AS(frobenius_family(quintic_operator(), 0), Error);
}

TEST_CASE("eps polynomial arithmetic") {
    // (1 + eps)^{-1} = 1 - eps + eps^2 - eps^3 mod eps^4
    EpsPoly p = EpsPoly::linear(1, 1);
    EpsPoly inv = p.inverse();
    CHECK(inv.c[0] == Rational(1));
    CHECK(inv.c[1] == Rational(-1));
    CHECK(inv.c[2] == Rational(1));
    CHECK(inv.c[3] == Rational(-1));
    EpsPoly prod = p * inv;
    CHECK(prod.c[0] == Rational(1));
    for (int i = 1; i < 4; ++i) CHECK(prod.c[i] == Rational(0));
}
