#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mirsym.h"

namespace {

struct ResultGuard {
    msym_result* r = nullptr;
    ~ResultGuard() { msym_result_free(r); }
};

}  // namespace

TEST_CASE("quintic through the C surface") {
    ResultGuard g;
    REQUIRE(msym_quintic(3, -1, 0, &g.r) == MSYM_OK);
    auto j = nlohmann::json::parse(msym_result_json(g.r));
    CHECK(j["mirror_map_integral"] == true);
    CHECK(j["coupling_constant_term"] == "5");
    CHECK(j["rows"][0]["n_int"] == "2875");
    CHECK(j["rows"][1]["n_int"] == "609250");
    CHECK(std::string(msym_result_text(g.r)).find("2875") != std::string::npos);
}

TEST_CASE("deterministic output") {
    ResultGuard a, b;
    REQUIRE(msym_hurwitz(2, 6, 0, 1, 1, &a.r) == MSYM_OK);
    REQUIRE(msym_hurwitz(2, 6, 0, 1, 2, &b.r) == MSYM_OK);
    CHECK(std::string(msym_result_json(a.r)) == msym_result_json(b.r));
    CHECK(std::string(msym_result_text(a.r)) == msym_result_text(b.r));
}

TEST_CASE("eisenstein rendering") {
    ResultGuard g;
    REQUIRE(msym_eisenstein(2, 2, &g.r) == MSYM_OK);
    CHECK(std::string(msym_result_text(g.r)) == "1, -24, -72\n");
    auto j = nlohmann::json::parse(msym_result_json(g.r));
    CHECK(j["coeffs"][0] == "1");
    CHECK(j["coeffs"][2] == "-72");
}

TEST_CASE("error paths surface as status codes") {
    msym_result* r = nullptr;
    CHECK(msym_quintic(-2, -1, 0, &r) == MSYM_ERROR_INVALID_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(std::string(msym_last_error()).size() > 0);

    CHECK(msym_eisenstein(5, 4, &r) == MSYM_ERROR_INVALID_ARGUMENT);
    CHECK(msym_ainfty_check("{ not json", 4, nullptr, &r) == MSYM_ERROR_PARSE);
    CHECK(msym_ainfty_check(nullptr, 4, nullptr, &r) == MSYM_ERROR_INVALID_ARGUMENT);
    CHECK(msym_fukaya_torus("1/0,1/0,0/1", "0,0,0", 1.0, 1e-12, 0, &r) ==
          MSYM_ERROR_INVALID_ARGUMENT);
    CHECK(msym_selftest("no-such-module", 1, nullptr, &r) == MSYM_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("ainfty check verdicts") {
    const char* good = R"({
        "basis": [{"name": "one", "degree": 0}, {"name": "eps", "degree": 0}],
        "identities": {"*": "one"},
        "ops": [
            {"args": ["one", "one"], "out": [{"elem": "one", "coeff": "1"}]},
            {"args": ["one", "eps"], "out": [{"elem": "eps", "coeff": "1"}]},
            {"args": ["eps", "one"], "out": [{"elem": "eps", "coeff": "1"}]}
        ]})";
    ResultGuard g;
    int pass = 0;
    REQUIRE(msym_ainfty_check(good, 5, &pass, &g.r) == MSYM_OK);
    CHECK(pass == 1);

    // non-associative product: 1*(e*e) = 1 but (1*e)*e = 0
    const char* bad = R"({
        "basis": [{"name": "one", "degree": 0}, {"name": "eps", "degree": 0}],
        "ops": [
            {"args": ["one", "one"], "out": [{"elem": "one", "coeff": "1"}]},
            {"args": ["eps", "eps"], "out": [{"elem": "one", "coeff": "1"}]}
        ]})";
    ResultGuard h;
    int pass2 = 1;
    REQUIRE(msym_ainfty_check(bad, 4, &pass2, &h.r) == MSYM_OK);
    CHECK(pass2 == 0);
}

TEST_CASE("fukaya through the C surface") {
    ResultGuard g;
    REQUIRE(msym_fukaya_torus("1/-1,0/1,1/1,1/0", "0,0,1/2,1/4", 1.0, 1e-12, 1, &g.r) ==
            MSYM_OK);
    auto j = nlohmann::json::parse(msym_result_json(g.r));
    REQUIRE(j.contains("associativity"));
    double residual = std::stod(j["associativity"]["max_residual"].get<std::string>());
    CHECK(residual < 1e-9);
    CHECK(j["associativity"]["lhs_nonzero"] == true);
}

TEST_CASE("selftest entry point") {
    ResultGuard g;
    int pass = 0;
    REQUIRE(msym_selftest("eisenstein", 1, &pass, &g.r) == MSYM_OK);
    CHECK(pass == 1);
    CHECK(std::string(msym_version()).find("mirsym") == 0);
}

TEST_CASE("result accessors tolerate null") {
    CHECK(std::string(msym_result_json(nullptr)).empty());
    CHECK(std::string(msym_result_text(nullptr)).empty());
    msym_result_free(nullptr);
    msym_result* r = nullptr;
    CHECK(msym_quintic(2, -1, 0, nullptr) == MSYM_ERROR_INVALID_ARGUMENT);
    (void)r;
}
