#include <doctest.h>

#include <algorithm>

#include "ech/corpus.hpp"
#include "ech/toric.hpp"
#include "test_util.hpp"

using namespace ech;
using namespace ech::testutil;

namespace {

bool same_ray_set(const std::vector<Point2>& rays, std::vector<Point2> expect) {
    if (rays.size() != expect.size()) return false;
    for (const auto& r : rays) {
        auto it = std::find(expect.begin(), expect.end(), r);
        if (it == expect.end()) return false;
        expect.erase(it);
    }
    return true;
}

}  // namespace

TEST_CASE("inner normal fans") {
    CHECK(same_ray_set(inner_normal_fan(corpus_domain("unit_square").domain).rays,
                       {pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}));
    CHECK(same_ray_set(inner_normal_fan(corpus_domain("delta1").domain).rays,
                       {pt(1, 0), pt(0, 1), pt(-1, -1)}));
    CHECK(same_ray_set(inner_normal_fan(corpus_domain("omega1").domain).rays,
                       {pt(1, 0), pt(0, 1), pt(-1, -1), pt(-1, 0)}));
}

TEST_CASE("fan validation") {
    Fan2 ok{{pt(1, 0), pt(0, 1), pt(-1, -1)}, FanConvention::normal_fan};
    CHECK_NOTHROW(validate_fan(ok));
    CHECK_THROWS_AS(validate_fan(Fan2{{pt(1, 0), pt(0, 1)}, FanConvention::normal_fan}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_fan(Fan2{{pt(2, 0), pt(0, 1), pt(-1, -1)}, FanConvention::normal_fan}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        validate_fan(Fan2{{pt(1, 0), pt(-1, -1), pt(0, 1)}, FanConvention::normal_fan}),
        std::invalid_argument);
    // Star ordering: consecutive turns all positive but wrapping twice.
    Fan2 star{{pt(1, 0), pt(-1, 1), pt(0, -1), pt(1, 1), pt(-1, 0), pt(1, -1)},
              FanConvention::normal_fan};
    CHECK_THROWS_AS(validate_fan(star), std::invalid_argument);
}

TEST_CASE("slope fan is the rotated normal fan") {
    for (const auto& d : corpus()) {
        Fan2 n = inner_normal_fan(d.domain);
        Fan2 s = slope_fan(d.domain);
        REQUIRE(n.rays.size() == s.rays.size());
        for (size_t i = 0; i < n.rays.size(); ++i) CHECK(s.rays[i] == perp(n.rays[i]));
    }
}

TEST_CASE("balance divisor coefficients") {
    ToricDivisor d = balance_divisor(corpus_domain("delta1").domain);
    for (size_t i = 0; i < d.fan.rays.size(); ++i) {
        Rat expect = d.fan.rays[i] == pt(-1, -1) ? 1 : 0;
        CHECK(d.coeffs[i] == expect);
    }
    ToricDivisor sq = balance_divisor(corpus_domain("unit_square").domain);
    for (size_t i = 0; i < sq.fan.rays.size(); ++i) {
        Rat expect = (sq.fan.rays[i] == pt(-1, 0) || sq.fan.rays[i] == pt(0, -1)) ? 1 : 0;
        CHECK(sq.coeffs[i] == expect);
    }
}

TEST_CASE("polytope round trip") {
    for (const auto& d : corpus()) {
        auto p = divisor_polytope(balance_divisor(d.domain));
        REQUIRE(p.has_value());
        CHECK(*p == d.domain.polygon);
    }
}

TEST_CASE("h0") {
    ToricDivisor d = balance_divisor(corpus_domain("delta1").domain);
    for (long long x = 0; x <= 6; ++x) CHECK(h0(Rat(x) * d) == (x + 1) * (x + 2) / 2);
    CHECK(h0(Rat(0) * d) == 1);  // zero divisor
    for (const auto& dom : corpus()) {
        ToricDivisor b = balance_divisor(dom.domain);
        for (long long x = 0; x <= 6; ++x)
            CHECK(h0(Rat(x) * b) == lattice_point_count(dilate(dom.domain.polygon, Rat(x))));
    }
}

TEST_CASE("nef") {
    for (const auto& d : corpus()) {
        ToricDivisor b = balance_divisor(d.domain);
        CHECK(is_nef(b));
        CHECK(is_nef(b + Rat(2) * b));
    }
    // Negating a coefficient destroys nef-ness (or empties the polytope).
    ToricDivisor b = balance_divisor(corpus_domain("delta1").domain);
    b.coeffs[0] -= 2;
    CHECK(!is_nef(b));
}

TEST_CASE("intersection equals the omega perimeter") {
    int pairs = 0;
    for (const auto& om : corpus()) {
        if (om.domain.is_free || !om.domain.is_lattice) continue;
        ToricDivisor d_om = balance_divisor(om.domain);
        for (const auto& la : corpus()) {
            if (la.domain.is_free || !la.domain.is_lattice) continue;
            ConvexPolygon s = stretch(om.domain, la.domain.polygon);
            ToricDivisor d_la = divisor_from_parallel_polygon(om.domain, s);
            CHECK(intersect_nef(d_la, d_om) == omega_perimeter(om.domain, la.domain.polygon));
            CHECK(intersect_nef(d_om, d_la) == intersect_nef(d_la, d_om));
            ++pairs;
        }
    }
    CHECK(pairs >= 20);
}

TEST_CASE("intersect_nef rejects mismatched fans and non-nef input") {
    ToricDivisor a = balance_divisor(corpus_domain("delta1").domain);
    ToricDivisor b = balance_divisor(corpus_domain("unit_square").domain);
    CHECK_THROWS_AS(intersect_nef(a, b), std::invalid_argument);
    ToricDivisor bad = a;
    bad.coeffs[0] -= 2;
    CHECK_THROWS_AS(intersect_nef(bad, a), std::invalid_argument);
}

TEST_CASE("divisor_from_parallel_polygon rejects foreign slopes") {
    const ConvexDomain& sq = corpus_domain("unit_square").domain;
    CHECK_THROWS_AS(divisor_from_parallel_polygon(sq, tri(1)), std::invalid_argument);
}

TEST_CASE("cartier data") {
    for (const auto& name : {"delta1", "omega1", "unit_square"}) {
        const ConvexDomain& om = corpus_domain(name).domain;
        const ConvexPolygon& L = om.polygon;
        Fan2 sf = slope_fan(om);
        auto data = cartier_data(om, L);
        REQUIRE(data.size() == sf.rays.size());
        for (size_t i = 0; i < sf.rays.size(); ++i) {
            const Point2& r0 = sf.rays[i];
            const Point2& r1 = sf.rays[(i + 1) % sf.rays.size()];
            // The datum is perp(q) for the vertex q supporting both rays of
            // the cone.
            bool found = false;
            for (const auto& q : L.vertices()) {
                if (perp(q) != data[i]) continue;
                bool max0 = true, max1 = true;
                for (const auto& v : L.vertices()) {
                    max0 = max0 && cross(r0, v) <= cross(r0, q);
                    max1 = max1 && cross(r1, v) <= cross(r1, q);
                }
                found = max0 && max1;
                if (found) break;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("algebraic capacities") {
    std::vector<Rat> d1 = {0, 1, 1, 2, 2, 2};
    CHECK(alg_capacities(corpus_domain("delta1").domain, 5).values == d1);
    const ConvexDomain& om1 = corpus_domain("omega1").domain;
    CHECK(alg_capacities(om1, 6).values == capacities_bruteforce(om1, 6).values);
    std::vector<Rat> fr = {0, 1, 2, 2};
    CHECK(alg_capacities(corpus_domain("free_square").domain, 3).values == fr);
}
