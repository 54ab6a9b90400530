// Randomized property tests with a fixed seed: every run checks the same
// pseudo-random instances, so failures are reproducible.

#include <doctest.h>

#include <random>

#include "ech/corpus.hpp"
#include "ech/quasi.hpp"
#include "ech/toric.hpp"
#include "test_util.hpp"

using namespace ech;
using namespace ech::testutil;

namespace {

std::vector<Point2> random_lattice_points(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> coord(lo, hi);
    std::vector<Point2> pts;
    for (int i = 0; i < n; ++i) pts.push_back(pt(coord(rng), coord(rng)));
    return pts;
}

// A random standard lattice domain: hull of points in the first quadrant
// together with the axis corners (0,0), (a,0), (0,b).
ConvexDomain random_standard_domain(std::mt19937& rng, int size) {
    std::uniform_int_distribution<int> coord(1, size);
    int a = coord(rng), b = coord(rng);
    std::vector<Point2> pts = {pt(0, 0), pt(a, 0), pt(0, b)};
    // Extra points stay within [0,a]x[0,b] so the widest point of the hull is
    // on the x-axis and the tallest on the y-axis, as ConvexDomain::standard
    // requires.
    std::uniform_int_distribution<int> extra(0, 3);
    std::uniform_int_distribution<int> ex(0, a), ey(0, b);
    for (int i = extra(rng); i > 0; --i) pts.push_back(pt(ex(rng), ey(rng)));
    return ConvexDomain::standard(ConvexPolygon::from_points(pts));
}

}  // namespace

TEST_CASE("random hulls satisfy Pick's identity") {
    std::mt19937 rng(20240811);
    for (int it = 0; it < 60; ++it) {
        auto pts = random_lattice_points(rng, 6, -5, 5);
        ConvexPolygon p = ConvexPolygon::from_points(pts);
        if (p.is_degenerate()) continue;
        CHECK(pick_identity_check(p));
        // Hull of the vertices reproduces the polygon.
        CHECK(ConvexPolygon::from_points(p.vertices()) == p);
        // Lattice counts are invariant under point reflection.
        std::vector<Point2> reflected;
        for (const auto& q : p.vertices()) reflected.push_back(-q);
        CHECK(lattice_point_count(p) ==
              lattice_point_count(ConvexPolygon::from_points(reflected)));
    }
}

TEST_CASE("random dilation counts match the Ehrhart polynomial") {
    std::mt19937 rng(7);
    for (int it = 0; it < 25; ++it) {
        auto pts = random_lattice_points(rng, 5, 0, 4);
        ConvexPolygon p = ConvexPolygon::from_points(pts);
        if (p.is_degenerate()) continue;
        // ehrhart_polynomial verifies itself against direct counts and throws
        // on any mismatch.
        CHECK_NOTHROW(ehrhart_polynomial(p));
    }
}

TEST_CASE("random standard domains: self-perimeter, weights, capacities") {
    std::mt19937 rng(99);
    for (int it = 0; it < 12; ++it) {
        ConvexDomain dom = random_standard_domain(rng, 4);
        CHECK(omega_perimeter(dom, dom.polygon) == area2(dom.polygon));
        WeightSequence w = weight_sequence(dom);
        CHECK(weights_area2(w) == area2(dom.polygon));
        CHECK(weights_lattice_count(w) == lattice_point_count(dom.polygon));
        auto bf = capacities_bruteforce(dom, 5).values;
        auto ww = capacities_from_weights(w, 5).values;
        CHECK_MESSAGE(bf == ww, "domain ", polygon_to_string(dom.polygon));
    }
}

TEST_CASE("random pairs: symmetry and stretch invariance") {
    std::mt19937 rng(1234);
    for (int it = 0; it < 10; ++it) {
        ConvexDomain a = random_standard_domain(rng, 4);
        ConvexDomain b = random_standard_domain(rng, 4);
        CHECK(omega_perimeter(a, b.polygon) == omega_perimeter(b, a.polygon));
        ConvexPolygon s = stretch(a, b.polygon);
        CHECK(omega_perimeter(a, b.polygon) == omega_perimeter(a, s));
        CHECK(stretch(a, s) == s);
    }
}

TEST_CASE("random domains: toric route agrees with the path oracle") {
    std::mt19937 rng(555);
    for (int it = 0; it < 6; ++it) {
        ConvexDomain dom = random_standard_domain(rng, 3);
        CHECK(alg_capacities(dom, 4).values == capacities_bruteforce(dom, 4).values);
        auto p = divisor_polytope(balance_divisor(dom));
        REQUIRE(p.has_value());
        CHECK(*p == dom.polygon);
    }
}

TEST_CASE("random cap values satisfy duality and the staircase inversion") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 8; ++it) {
        ConvexDomain dom = random_standard_domain(rng, 3);
        WeightSequence w = weight_sequence(dom);
        auto seq = capacities_from_weights(w, 30).values;
        for (long long r = 0; r <= 5; ++r) {
            if (seq.back() <= Rat(r)) break;
            Int count = 0;
            for (const auto& c : seq)
                if (c <= Rat(r)) ++count;
            CHECK(count == cap_from_weights(w, Rat(r)));
        }
    }
}

TEST_CASE("weight recursion is stable under domain scaling") {
    std::mt19937 rng(2718);
    for (int it = 0; it < 8; ++it) {
        ConvexDomain dom = random_standard_domain(rng, 3);
        ConvexDomain doubled = ConvexDomain::standard(dilate(dom.polygon, Rat(2)));
        WeightSequence w = weight_sequence(dom);
        WeightSequence w2 = weight_sequence(doubled);
        // Scaling the domain scales every weight.
        CHECK(w2.c == 2 * w.c);
        REQUIRE(w2.a.size() == w.a.size());
        REQUIRE(w2.b.size() == w.b.size());
        for (size_t i = 0; i < w.a.size(); ++i) CHECK(w2.a[i] == 2 * w.a[i]);
        for (size_t i = 0; i < w.b.size(); ++i) CHECK(w2.b[i] == 2 * w.b[i]);
        // Conformality of the capacities.
        auto base = capacities_from_weights(w, 8).values;
        auto twice = capacities_from_weights(w2, 8).values;
        for (size_t k = 0; k < base.size(); ++k) CHECK(twice[k] == 2 * base[k]);
    }
}
