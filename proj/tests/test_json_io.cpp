#include <doctest.h>

#include "ech/corpus.hpp"
#include "ech/json_io.hpp"
#include "test_util.hpp"

using namespace ech;
using namespace ech::testutil;

TEST_CASE("polygon round trip") {
    for (const auto& d : corpus()) {
        json j = polygon_to_json(d.domain.polygon);
        CHECK(polygon_from_json(j) == d.domain.polygon);
    }
    json j = json::parse(R"({"vertices": [["0","0"], ["1","0"], ["0","1/2"]]})");
    ConvexPolygon p = polygon_from_json(j);
    CHECK(p.size() == 3);
    CHECK(polygon_to_json(p)["vertices"].size() == 3);
}

TEST_CASE("domain round trip keeps the free flag") {
    for (const auto& d : corpus()) {
        ConvexDomain back = domain_from_json(domain_to_json(d.domain));
        CHECK(back.polygon == d.domain.polygon);
        CHECK(back.is_free == d.domain.is_free);
        CHECK(back.is_lattice == d.domain.is_lattice);
    }
}

TEST_CASE("weights round trip") {
    for (const auto& d : corpus()) {
        if (d.domain.is_free || !d.domain.is_lattice) continue;
        WeightSequence w = weight_sequence(d.domain);
        CHECK(weights_from_json(weights_to_json(w)) == w);
    }
    json j = json::parse(R"({"c": "5", "a": ["2"], "b": ["3"]})");
    WeightSequence w = weights_from_json(j);
    CHECK(w.c == 5);
    CHECK(w.a == std::vector<Int>{2});
    CHECK(w.b == std::vector<Int>{3});
    // Plain JSON integers are accepted too.
    CHECK(weights_from_json(json::parse(R"({"c": 5, "a": [2], "b": [3]})")) == w);
}

TEST_CASE("divisor round trip") {
    for (const auto& d : corpus()) {
        ToricDivisor dv = balance_divisor(d.domain);
        ToricDivisor back = divisor_from_json(divisor_to_json(dv));
        CHECK(back.fan == dv.fan);
        CHECK(back.coeffs == dv.coeffs);
    }
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": []})")), std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"points": [["0","0"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": [["1"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(rat_from_json(json::parse(R"("2/0")")), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_json(json::parse("1.5")), std::invalid_argument);
    CHECK_THROWS_AS(weights_from_json(json::parse(R"({"c": "1/2"})")), std::invalid_argument);
    CHECK_THROWS_AS(
        divisor_from_json(json::parse(R"({"rays": [[1,0],[0,1]], "coeffs": ["0","0"]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        divisor_from_json(json::parse(
            R"({"rays": [[1,0],[0,1],[-1,-1]], "coeffs": ["0","0"]})")),
        std::invalid_argument);
}
