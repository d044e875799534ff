#include "rtw/verification.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "rtw/genclique.hpp"
#include "rtw/lagrangian.hpp"
#include "rtw/ramsey.hpp"

using namespace rtw;

TEST_CASE("pentagon-hub extremal instance has the pinned structure") {
    WCCG g = rho36_extremal();
    REQUIRE(g.t == 6);
    for (int v = 0; v < 5; ++v) CHECK(g.vertex_colors[v] == Color::red);
    CHECK(g.vertex_colors[5] == Color::blue);

    ColoredGraph pent = pentagonlike();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            CHECK(g.color(i, j) == pent.color(i, j));
            CHECK(g.weight(i, j) == Weight::one);
        }
    for (int i = 0; i < 5; ++i) {
        CHECK(g.color(i, 5) == Color::red);
        CHECK(g.weight(i, 5) == Weight::one);
    }
    CHECK(g.mass() == Rat(15));
    CHECK(maximize_exact(g).density() == Rat(5, 6));
}

TEST_CASE("eight-vertex extremal instances copy the enumerated family") {
    std::vector<ColoredGraph> family = gamma8_family();
    REQUIRE(family.size() == 3);
    for (int variant = 0; variant < 3; ++variant) {
        WCCG g = rho37_extremal(variant);
        REQUIRE(g.t == 8);
        for (int v = 0; v < 8; ++v) CHECK(g.vertex_colors[v] == Color::red);
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) {
                CHECK(g.weight(i, j) == Weight::one);
                CHECK(g.color(i, j) == family[variant].color(i, j));
            }
    }
    CHECK_THROWS_WITH_AS(rho37_extremal(3), "variant must be 0, 1, or 2",
                         std::invalid_argument);
    CHECK_THROWS_AS(rho37_extremal(-1), std::invalid_argument);
}

TEST_CASE("ten-vertex instances place their half edges as documented") {
    std::array<WCCG, 3> mats = fact_t10_matrices();
    std::array<std::set<std::pair<int, int>>, 3> expected = {
        std::set<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}, {0, 6}},
        std::set<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}, {0, 2}},
        std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}},
    };
    for (int k = 0; k < 3; ++k) {
        const WCCG& g = mats[k];
        REQUIRE(g.t == 10);
        std::set<std::pair<int, int>> halfs;
        for (int i = 0; i < 10; ++i)
            for (int j = i + 1; j < 10; ++j) {
                CHECK(g.color(i, j) == Color::red);
                if (g.weight(i, j) == Weight::half) halfs.insert({i, j});
                else CHECK(g.weight(i, j) == Weight::one);
            }
        CHECK(halfs == expected[k]);
        for (Color c : mats[k].vertex_colors) CHECK(c == Color::red);
    }
}

TEST_CASE("property suite reruns are byte-identical") {
    SuiteReport a = run_suite("properties", 7, 1);
    SuiteReport b = run_suite("properties", 7, 1);
    CHECK(a.all_passed);
    CHECK(a.text() == b.text());
    CHECK(a.json() == b.json());
    CHECK(a.text().find("result: all passed") != std::string::npos);

    // A different seed draws different instances but still passes.
    SuiteReport c = run_suite("properties", 8, 1);
    CHECK(c.all_passed);
    CHECK(c.json() != a.json());
}

TEST_CASE("suite reports parse as structured JSON") {
    SuiteReport rep = run_suite("properties", 7, 1);
    nlohmann::json j = nlohmann::json::parse(rep.json());
    CHECK(j.at("suite") == "properties");
    CHECK(j.at("seed") == 7);
    CHECK(j.at("all_passed") == true);
    REQUIRE(j.at("checks").is_array());
    REQUIRE(j.at("checks").size() == rep.checks.size());
    for (size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(j["checks"][i].at("name") == rep.checks[i].name);
        CHECK(j["checks"][i].at("passed") == rep.checks[i].passed);
    }
}

TEST_CASE("fault injection breaks exactly the family comparison") {
    SuiteReport rep = run_suite("paper", 0, 1, true);
    CHECK_FALSE(rep.all_passed);
    int failed = 0;
    for (const CheckResult& c : rep.checks)
        if (!c.passed) {
            ++failed;
            CHECK(c.name == "eight-vertex family match");
            CHECK_FALSE(c.detail.empty());
        }
    CHECK(failed == 1);
    CHECK(rep.text().find("[FAIL] eight-vertex family match") != std::string::npos);
}

TEST_CASE("suite arguments are validated") {
    CHECK_THROWS_WITH_AS(run_suite("nope", 0, 1), "unknown suite",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(run_suite("paper", 0, 0), "threads must be positive",
                         std::invalid_argument);
}
