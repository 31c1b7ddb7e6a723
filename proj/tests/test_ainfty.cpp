#include <set>
#include <fstream>
#include <sstream>

#include "ainfty.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fixtures.hpp"

using namespace mirsym;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool clean(const AInftyCategory& c, int arity) {
    return stasheff_check(c, arity).empty() && coderivation_square(c, arity).empty();
}

}  // namespace

TEST_CASE("dg fixtures satisfy every identity") {
    for (auto make : {fixtures::dual_numbers, fixtures::exterior_line, fixtures::acyclic_dg,
                      fixtures::two_object_acyclic_hom}) {
        AInftyCategory c = make();
        CHECK(clean(c, 5));
        std::string why;
        CHECK(c.units_strict(&why));
    }
}

TEST_CASE("suspension bookkeeping: b differs from m by the shifted Koszul sign") {
    // with sdeg = deg - 1 (A[1]^k = A^{k+1}), b_2(one, t) = -m_2(one, t)
    AInftyCategory c = fixtures::exterior_line();
    int one = c.find_basis("one"), t = c.find_basis("t");
    SparseElem m = c.apply_m(2, {one, t});
    SparseElem b = c.apply_b(2, {one, t});
    REQUIRE(m.size() == 1);
    CHECK(m[0] == std::pair<int, Rational>{t, Rational(1)});
    CHECK(b[0] == std::pair<int, Rational>{t, Rational(-1)});
    // first-argument degree even in the shifted grading: no sign
    CHECK(c.apply_b(2, {t, one}) == c.apply_m(2, {t, one}));
}

TEST_CASE("perturbing one m_2 constant trips the arity-3 identity") {
    AInftyCategory bad = fixtures::perturb_m2(fixtures::dual_numbers(), Rational(1));
    auto residuals = stasheff_check(bad, 3);
    REQUIRE(!residuals.empty());
    bool arity3 = false;
    for (const auto& r : residuals) arity3 |= (r.arity == 3);
    CHECK(arity3);
    CHECK(!coderivation_square(bad, 3).empty());
}

TEST_CASE("checker verdicts agree on randomized structures") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        AInftyCategory t = gauge_transport(fixtures::acyclic_dg(), seed, 4);
        auto st = stasheff_check(t, 4);
        auto cd = coderivation_square(t, 4);
        CHECK(st.empty());
        CHECK(cd.empty());

        // a perturbation must be caught by both, on the same input words
        AInftyCategory bad = fixtures::perturb_m2(t, Rational(3, 2));
        auto st_bad = stasheff_check(bad, 4);
        auto cd_bad = coderivation_square(bad, 4);
        CHECK(!st_bad.empty());
        CHECK(!cd_bad.empty());
        // corestriction support of D^2 equals the stasheff support
        std::set<std::vector<int>> st_support, cd_support;
        for (const auto& r : st_bad) st_support.insert(r.args);
        for (const auto& r : cd_bad)
            if (r.out.size() == 1) cd_support.insert(r.in);
        CHECK(st_support == cd_support);
    }
}

TEST_CASE("gauge transport produces honest higher operations") {
    AInftyCategory t = gauge_transport(fixtures::acyclic_dg(), 7u, 4);
    REQUIRE(t.ops.count(3));
    CHECK(!t.ops.at(3).empty());
    CHECK(clean(t, 4));
    // the transported differential is unchanged (linear gauge part is id)
    AInftyCategory c = fixtures::acyclic_dg();
    CHECK(t.ops.at(1) == c.ops.at(1));
}

TEST_CASE("one-entry twisted complex embeds the category") {
    AInftyCategory c = fixtures::exterior_line();
    TwistedComplex x;
    x.name = "X";
    x.entries = {{0, 0, 0}};
    AInftyCategory tw = twisted_complex_category(c, {x}, 4);
    REQUIRE(tw.basis.size() == c.basis.size());
    for (size_t i = 0; i < c.basis.size(); ++i)
        CHECK(tw.basis[i].degree == c.basis[i].degree);
    // compositions coincide with those of C
    for (const auto& [k, table] : c.ops) {
        REQUIRE(tw.ops.count(k));
        CHECK(tw.ops.at(k).size() == table.size());
        for (const auto& [tuple, out] : table) {
            auto it = tw.ops.at(k).find(tuple);
            REQUIRE(it != tw.ops.at(k).end());
            CHECK(it->second == out);
        }
    }
    CHECK(clean(tw, 4));
    CHECK(tw.has_identities());
    std::string why;
    CHECK(tw.units_strict(&why));
}

TEST_CASE("free-module complexes reproduce the classical hom complex") {
    AInftyCategory k = fixtures::ground_field();
    // X: k at index 0 -> k at index 1 with the identity differential (a
    // contractible two-term complex); Y: k at index 0.
    TwistedComplex x;
    x.name = "X";
    x.entries = {{0, 0, 0}, {1, 0, 0}};
    x.diffs[{0, 1}] = {{k.find_basis("one"), Rational(1)}};
    TwistedComplex y;
    y.name = "Y";
    y.entries = {{0, 0, 0}};

    CHECK(mc_check(x, k).empty());
    AInftyCategory tw = twisted_complex_category(k, {x, y}, 3);
    CHECK(clean(tw, 3));

    // Hom(X, Y) = Hom(X^0, Y)[0] + Hom(X^1, Y)[-1]: degrees {0, -1}
    std::vector<int> degs;
    for (const auto& el : tw.basis)
        if (el.src == 0 && el.dst == 1) degs.push_back(el.degree);
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{-1, 0});

    // H^0 hom spaces vanish against the contractible complex
    CohomologyCategory h = cohomology_category(tw);
    CHECK(h.hom_dim(0, 1) == 0);
    CHECK(h.hom_dim(1, 0) == 0);
    CHECK(h.hom_dim(1, 1) == 1);  // End(Y) = k
    CHECK(h.associative);
}

TEST_CASE("cone of a degree-1 cocycle is a valid twisted complex") {
    AInftyCategory ext = fixtures::exterior_line();
    TwistedComplex cone;
    cone.name = "cone";
    cone.entries = {{0, 0, 0}, {1, 0, 1}};  // X and X[1]
    cone.diffs[{0, 1}] = {{ext.find_basis("t"), Rational(1)}};
    CHECK(mc_check(cone, ext).empty());
    AInftyCategory tw = twisted_complex_category(ext, {cone}, 4);
    CHECK(clean(tw, 4));  // in particular the new m_1 squares to zero
}

TEST_CASE("maurer-cartan violations are reported and rejected") {
    AInftyCategory dg = fixtures::acyclic_dg();
    // d = x has m_1(x) = y != 0: the (0,1) component of the residual survives
    TwistedComplex bad;
    bad.name = "bad";
    bad.entries = {{0, 0, 0}, {1, 0, 0}};
    bad.diffs[{0, 1}] = {{dg.find_basis("x"), Rational(1)}};
    auto residual = mc_check(bad, dg);
    REQUIRE(residual.size() == 1);
    CHECK(residual.count({0, 1}) == 1);
    CHECK_THROWS_AS(twisted_complex_category(dg, {bad}, 3), MaurerCartanViolated);

    // zero differentials always pass
    TwistedComplex ok;
    ok.entries = {{0, 0, 0}, {2, 0, 2}};
    CHECK(mc_check(ok, dg).empty());

    // strict upper triangularity is required
    TwistedComplex lower;
    lower.entries = {{0, 0, 0}, {1, 0, 0}};
    lower.diffs[{1, 1}] = {{dg.find_basis("x"), Rational(1)}};
    CHECK_THROWS_AS(mc_check(lower, dg), Error);
}

TEST_CASE("H(C) of a category with m_1 = 0 keeps the degree-0 homs") {
    AInftyCategory c = fixtures::dual_numbers();
    CohomologyCategory h = cohomology_category(c);
    CHECK(h.hom_dim(0, 0) == 2);
    CHECK(h.associative);
    CHECK(h.identities_ok);
}

TEST_CASE("H(C) kills acyclic hom complexes") {
    CohomologyCategory h = cohomology_category(fixtures::two_object_acyclic_hom());
    CHECK(h.hom_dim(0, 1) == 0);
    CHECK(h.hom_dim(0, 0) == 1);
    CHECK(h.hom_dim(1, 1) == 1);
    CHECK(h.associative);
    CHECK(h.identities_ok);
}

TEST_CASE("H(C) composition stays associative in the presence of m_3") {
    for (unsigned seed = 11; seed <= 16; ++seed) {
        AInftyCategory t = gauge_transport(fixtures::acyclic_dg(), seed, 4);
        CohomologyCategory h = cohomology_category(t);
        CHECK(h.associative);
    }
}

TEST_CASE("square-zero precondition of H(C)") {
    AInftyCategory c = fixtures::acyclic_dg();
    // break d^2 = 0 by adding m_1(y) = (something of degree 2): no degree-2
    // element exists, so instead route m_1(x) = y and m_1(y) -> invalid; use
    // a fresh structure with x -> y -> x circular differential of degree 0.
    AInftyCategory bad;
    bad.objects = {"*"};
    bad.basis = {{"u", 0, 0, 0}, {"v", 1, 0, 0}, {"w", 2, 0, 0}};
    sparse_add(bad.ops[1][{0}], 1, Rational(1));  // m1(u) = v
    sparse_add(bad.ops[1][{1}], 2, Rational(1));  // m1(v) = w: m1^2(u) = w != 0
    bad.validate();
    CHECK_THROWS_AS(cohomology_category(bad), DifferentialNotSquareZero);
}

TEST_CASE("structure JSON round trip") {
    for (auto make : {fixtures::dual_numbers, fixtures::acyclic_dg,
                      fixtures::two_object_acyclic_hom}) {
        AInftyCategory c = make();
        AInftyCategory back = ainfty_from_json(ainfty_to_json(c));
        CHECK(back.objects == c.objects);
        REQUIRE(back.basis.size() == c.basis.size());
        for (size_t i = 0; i < c.basis.size(); ++i) {
            CHECK(back.basis[i].name == c.basis[i].name);
            CHECK(back.basis[i].degree == c.basis[i].degree);
        }
        CHECK(back.ops == c.ops);
        CHECK(back.identities == c.identities);
    }
    // a transported structure with fractional coefficients survives the trip
    AInftyCategory t = gauge_transport(fixtures::acyclic_dg(), 3u, 4);
    AInftyCategory back = ainfty_from_json(ainfty_to_json(t));
    CHECK(back.ops == t.ops);
}

TEST_CASE("shipped fixture files match the built-in structures") {
    struct Row {
        const char* file;
        AInftyCategory (*make)();
    };
    Row rows[] = {
        {"dg_dual_numbers.json", fixtures::dual_numbers},
        {"dg_exterior_line.json", fixtures::exterior_line},
        {"dg_acyclic.json", fixtures::acyclic_dg},
        {"two_object_acyclic_hom.json", fixtures::two_object_acyclic_hom},
    };
    for (const Row& row : rows) {
        AInftyCategory from_file =
            ainfty_from_json(read_file(std::string(FIXTURES_DIR) + "/" + row.file));
        AInftyCategory built = row.make();
        CHECK(from_file.ops == built.ops);
        CHECK(from_file.identities == built.identities);
    }
}

TEST_CASE("twisted complex JSON") {
    AInftyCategory ext = fixtures::exterior_line();
    TwistedComplex cone =
        twisted_from_json(read_file(std::string(FIXTURES_DIR) + "/tw_cone.json"), ext);
    CHECK(cone.entries.size() == 2);
    CHECK(mc_check(cone, ext).empty());
    CHECK(clean(twisted_complex_category(ext, {cone}, 3), 3));
}

TEST_CASE("bad structure JSON is rejected") {
    CHECK_THROWS_AS(ainfty_from_json("not json"), ParseError);
    CHECK_THROWS_AS(ainfty_from_json("{}"), ParseError);
    CHECK_THROWS_AS(ainfty_from_json(R"({"basis":[{"name":"e","degree":0}],
        "ops":[{"args":["f"],"out":[{"elem":"e","coeff":"1"}]}]})"),
                    ParseError);
    // degree rule violations surface as validation errors
    CHECK_THROWS_AS(ainfty_from_json(R"({"basis":[{"name":"e","degree":0}],
        "ops":[{"args":["e"],"out":[{"elem":"e","coeff":"1"}]}]})"),
                    Error);
}

TEST_CASE("algebra wrapper round trip") {
    AInftyCategory c = fixtures::acyclic_dg();
    AInftyStructure s = AInftyStructure::from_category(c);
    REQUIRE(s.space.size() == 3);
    CHECK(s.space[1] == std::pair<std::string, int>{"x", 0});
    AInftyCategory back = s.as_category();
    CHECK(back.ops == c.ops);
    CHECK(back.basis.size() == c.basis.size());
    CHECK_THROWS_AS(AInftyStructure::from_category(fixtures::two_object_acyclic_hom()), Error);
}

TEST_CASE("one-step complex with closed square-zero differential passes MC") {
    // d = eps in the dual numbers: m_1(d) = 0 and m_2(d, d) = 0
    AInftyCategory dual = fixtures::dual_numbers();
    TwistedComplex t;
    t.entries = {{0, 0, 0}, {1, 0, 0}};
    t.diffs[{0, 1}] = {{dual.find_basis("eps"), Rational(1)}};
    CHECK(mc_check(t, dual).empty());
    AInftyCategory tw = twisted_complex_category(dual, {t}, 4);
    CHECK(clean(tw, 4));
}

TEST_CASE("three-entry complex exercises multi-step differential chains") {
    AInftyCategory ext = fixtures::exterior_line();
    int t = ext.find_basis("t");
    // X -t-> X[1] -t-> X[2] with an extra component straight from 0 to 2;
    // every Maurer-Cartan term vanishes since t*t = 0 and m_1 = 0.
    TwistedComplex x;
    x.name = "X";
    x.entries = {{0, 0, 0}, {1, 0, 1}, {2, 0, 2}};
    x.diffs[{0, 1}] = {{t, Rational(1)}};
    x.diffs[{1, 2}] = {{t, Rational(1)}};
    x.diffs[{0, 2}] = {{t, Rational(2)}};
    REQUIRE(mc_check(x, ext).empty());

    TwistedComplex pt;
    pt.name = "pt";
    pt.entries = {{0, 0, 0}};

    AInftyCategory tw = twisted_complex_category(ext, {x, pt}, 4);
    CHECK(clean(tw, 4));
    CHECK(cohomology_category(tw).associative);
}
