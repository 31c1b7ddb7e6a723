#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "rational.hpp"
#include "series.hpp"

using namespace mirsym;

namespace {

std::mt19937 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937(seq);
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return Rational(num(rng), den(rng));
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, random_rational(rng));
    return s;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(770).str() == "770");
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("770") == Rational(770));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).inv() == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("3/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("series multiplication") {
    // (1 + z)(1 - z) = 1 - z^2
    TruncatedSeries a(2), b(2);
    a.set_coeff(0, 1); a.set_coeff(1, 1);
    b.set_coeff(0, 1); b.set_coeff(1, -1);
    TruncatedSeries p = a * b;
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(-1));

    // multiplicative identity
    auto rng = rng_for("series-mul-id");
    TruncatedSeries r = random_series(rng, 6);
    CHECK(r * TruncatedSeries::one(6) == r);

    // hand Cauchy product: (1+120z+113400z^2)(1-120z) = 1 + 0z + 99000z^2
    TruncatedSeries c(2), d(2);
    c.set_coeff(0, 1); c.set_coeff(1, 120); c.set_coeff(2, 113400);
    d.set_coeff(0, 1); d.set_coeff(1, -120);
    TruncatedSeries cd = c * d;
    CHECK(cd.coeff(0) == Rational(1));
    CHECK(cd.coeff(1) == Rational(0));
    CHECK(cd.coeff(2) == Rational(99000));
}

TEST_CASE("binary ops truncate to the minimum order") {
    TruncatedSeries a(5), b(3);
    a.set_coeff(5, 7);
    b.set_coeff(3, 2);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
}

TEST_CASE("series ring axioms on random instances") {
    auto rng = rng_for("series-ring");
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries a = random_series(rng, 8);
        TruncatedSeries b = random_series(rng, 8);
        TruncatedSeries c = random_series(rng, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("series exp") {
    TruncatedSeries zero(4);
    CHECK(zero.exp() == TruncatedSeries::one(4));

    TruncatedSeries z = TruncatedSeries::monomial(1, 1, 3);
    TruncatedSeries e = z.exp();
    CHECK(e.coeff(0) == Rational(1));
    CHECK(e.coeff(1) == Rational(1));
    CHECK(e.coeff(2) == Rational(1, 2));
    CHECK(e.coeff(3) == Rational(1, 6));

    TruncatedSeries bad = TruncatedSeries::constant(2, 3);
    CHECK_THROWS_AS(bad.exp(), NonzeroConstantTerm);
}

TEST_CASE("series log") {
    CHECK(TruncatedSeries::one(4).log() == TruncatedSeries(4));

    TruncatedSeries a(3);
    a.set_coeff(0, 1); a.set_coeff(1, 1);
    TruncatedSeries l = a.log();
    CHECK(l.coeff(1) == Rational(1));
    CHECK(l.coeff(2) == Rational(-1, 2));
    CHECK(l.coeff(3) == Rational(1, 3));

    CHECK_THROWS_AS(TruncatedSeries(3).log(), ConstantTermNotOne);
}

TEST_CASE("exp and log are mutually inverse") {
    // exp(log(1+z)) = 1 + z
    TruncatedSeries a(5);
    a.set_coeff(0, 1); a.set_coeff(1, 1);
    CHECK(a.log().exp() == a);

    auto rng = rng_for("exp-log");
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries u = random_series(rng, 8);
        u.set_coeff(0, 1);
        CHECK(u.log().exp() == u);
        TruncatedSeries v = random_series(rng, 8);
        v.set_coeff(0, 0);
        CHECK(v.exp().log() == v);
    }
}

TEST_CASE("log of a product is the sum of logs") {
    auto rng = rng_for("log-mul");
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries a = random_series(rng, 8);
        TruncatedSeries b = random_series(rng, 8);
        a.set_coeff(0, 1);
        b.set_coeff(0, 1);
        CHECK((a * b).log() == a.log() + b.log());
    }
}

TEST_CASE("series reversion") {
    TruncatedSeries z = TruncatedSeries::monomial(1, 1, 5);
    CHECK(z.reversion() == z);

    // a = z + z^2 has inverse q - q^2 + 2q^3 (solved by hand).
    TruncatedSeries a(3);
    a.set_coeff(1, 1); a.set_coeff(2, 1);
    TruncatedSeries b = a.reversion();
    CHECK(b.coeff(1) == Rational(1));
    CHECK(b.coeff(2) == Rational(-1));
    CHECK(b.coeff(3) == Rational(2));

    CHECK_THROWS_AS(TruncatedSeries::one(3).reversion(), NotInvertible);
    CHECK_THROWS_AS(TruncatedSeries::monomial(1, 2, 3).reversion(), NotInvertible);
}

TEST_CASE("reversion round trips") {
    auto rng = rng_for("reversion");
    for (int trial = 0; trial < 8; ++trial) {
        TruncatedSeries a = random_series(rng, 10);
        a.set_coeff(0, 0);
        a.set_coeff(1, 1);
        TruncatedSeries b = a.reversion();
        CHECK(b.reversion() == a);
        TruncatedSeries id = TruncatedSeries::monomial(1, 1, 10);
        CHECK(a.compose(b) == id);
        CHECK(b.compose(a) == id);
    }
}

TEST_CASE("series inverse") {
    auto rng = rng_for("inverse");
    for (int trial = 0; trial < 8; ++trial) {
        TruncatedSeries a = random_series(rng, 8);
        a.set_coeff(0, Rational(3, 2));
        CHECK(a * a.inverse() == TruncatedSeries::one(8));
    }
    CHECK_THROWS_AS(TruncatedSeries(4).inverse(), NotInvertible);
}

TEST_CASE("theta derivation on plain series") {
    // theta(z^n) = n z^n
    for (int n = 0; n <= 5; ++n) {
        TruncatedSeries zn = TruncatedSeries::monomial(1, n, 5);
        CHECK(zn.theta() == TruncatedSeries::monomial(n, n, 5));
    }
}

TEST_CASE("theta derivation on log series") {
    // theta(L) = 1
    LogSeries l = LogSeries::log_monomial(1, 1, 4);
    LogSeries one(TruncatedSeries::one(4));
    CHECK(l.theta() == one);

    // theta(L^2 z) = 2 L z + L^2 z (product rule by hand)
    LogSeries s(4, 2);
    s.set_part(2, TruncatedSeries::monomial(1, 1, 4));
    LogSeries expect(4, 2);
    expect.set_part(1, TruncatedSeries::monomial(2, 1, 4));
    expect.set_part(2, TruncatedSeries::monomial(1, 1, 4));
    CHECK(s.theta() == expect);
}

TEST_CASE("theta is a derivation on random log series") {
    auto rng = rng_for("theta-derivation");
    for (int trial = 0; trial < 10; ++trial) {
        LogSeries a(8, 1), b(8, 2);
        a.set_part(0, random_series(rng, 8));
        a.set_part(1, random_series(rng, 8));
        b.set_part(0, random_series(rng, 8));
        b.set_part(1, random_series(rng, 8));
        // keep total log degree within bounds for the product
        CHECK((a * b).theta() == a.theta() * b + a * b.theta());
    }
}

TEST_CASE("log degree is capped at 3") {
    LogSeries a = LogSeries::log_monomial(1, 2, 4);
    LogSeries b = LogSeries::log_monomial(1, 2, 4);
    CHECK_THROWS_AS(a * b, LogDegreeExceeded);
    CHECK_THROWS_AS(LogSeries(4, 5), LogDegreeExceeded);
}
