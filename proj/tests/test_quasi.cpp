#include <doctest.h>

#include "ech/corpus.hpp"
#include "ech/quasi.hpp"
#include "test_util.hpp"

using namespace ech;
using namespace ech::testutil;

TEST_CASE("ehrhart polynomials") {
    Quadratic d1 = ehrhart_polynomial(corpus_domain("delta1").domain.polygon);
    CHECK(d1 == Quadratic{Rat(1, 2), Rat(3, 2), 1});
    Quadratic om1 = ehrhart_polynomial(corpus_domain("omega1").domain.polygon);
    CHECK(om1 == Quadratic{Rat(3, 2), Rat(5, 2), 1});
    Quadratic sq = ehrhart_polynomial(corpus_domain("unit_square").domain.polygon);
    CHECK(sq == Quadratic{1, 2, 1});
    CHECK_THROWS_AS(ehrhart_polynomial(corpus_domain("half_triangle").domain.polygon),
                    std::invalid_argument);
}

TEST_CASE("ehrhart quasipolynomial of the half triangle") {
    const ConvexPolygon& P = corpus_domain("half_triangle").domain.polygon;
    Quasipolynomial qp = ehrhart_quasipolynomial(P);
    CHECK(qp.period == 2);
    std::vector<Int> counts = {1, 2, 4, 6, 9, 12};
    for (long long x = 0; x <= 5; ++x) {
        CHECK(lattice_point_count(dilate(P, Rat(x))) == counts[static_cast<size_t>(x)]);
        const Quadratic& piece = qp.pieces[static_cast<size_t>(x % 2)];
        CHECK(piece.eval(Int(x)) == Rat(counts[static_cast<size_t>(x)]));
    }
    // A lattice polygon degenerates to period 1 with the plain polynomial.
    Quasipolynomial flat = ehrhart_quasipolynomial(tri(1));
    CHECK(flat.period == 1);
    CHECK(flat.pieces[0] == Quadratic{Rat(1, 2), Rat(3, 2), 1});
}

TEST_CASE("cap quasifit on domains with a unit weight") {
    for (const char* name : {"omega1", "delta1"}) {
        const ConvexDomain& dom = corpus_domain(name).domain;
        QuasiFitReport rep = cap_quasifit(dom, 6);
        CHECK(rep.tight);
        Quadratic ehr = ehrhart_polynomial(dom.polygon);
        WeightSequence w = weight_sequence(dom);
        for (const auto& f : rep.fits) {
            CHECK(f.fitted);
            CHECK(f.onset == 0);
            CHECK(f.matched_form);
            CHECK(f.piece.a2 == ehr.a2);
            CHECK(f.piece.a1 == ehr.a1 + Rat(f.residue));
            // gamma_r = cap(r) - 1, and gamma_0 = 0.
            CHECK(f.gamma == Rat(cap_from_weights(w, Rat(f.residue)) - 1));
            if (f.residue == 0) CHECK(f.gamma == 0);
        }
    }
}

TEST_CASE("cap quasifit refuses gcd > 1") {
    CHECK_THROWS_AS(cap_quasifit(corpus_domain("delta2").domain, 6), std::invalid_argument);
}

TEST_CASE("polydisk residue piece") {
    // rect_1x2 has lambda = 4 and cap(4x) = (x+1)(2x+1).
    QuasiFitReport rep = cap_quasifit(corpus_domain("rect_1x2").domain, 6);
    CHECK(rep.lambda == 4);
    const ResidueFit& f0 = rep.fits[0];
    CHECK(f0.fitted);
    for (long long x = 0; x <= 5; ++x)
        CHECK(f0.piece.eval(Int(x)) == Rat((x + 1) * (2 * x + 1)));
}

TEST_CASE("hilbert match") {
    for (const char* name : {"omega1", "delta1", "unit_square", "half_triangle"}) {
        CheckReport rep = verify_hilbert_match(corpus_domain(name).domain, 4);
        CHECK_MESSAGE(rep.ok, name, ": ", rep.detail);
    }
}

TEST_CASE("optimal path corollary") {
    for (const char* name : {"delta1", "unit_square", "omega1"}) {
        CheckReport rep = verify_optimal_path(corpus_domain(name).domain, 2);
        CHECK_MESSAGE(rep.ok, name, ": ", rep.detail);
    }
}

TEST_CASE("asymptotics") {
    AsymptoticsReport rep = asymptotics_report(corpus_domain("delta1").domain, 5000);
    CHECK(rep.four_vol == 2);
    CHECK(!rep.rows.front().ratio.has_value());
    CHECK(rep.rows.front().ck == 0);
    CHECK(rep.rows.back().k == 5000);
    CHECK(rep.rows.back().ck == 99);
    CHECK(rep.final_deviation <= 0.05);
    AsymptoticsReport om = asymptotics_report(corpus_domain("omega1").domain, 500);
    CHECK(om.final_deviation <= 0.2);
}

TEST_CASE("mixed sweep finds the origin for the ball and omega1") {
    for (const char* name : {"delta1", "omega1"}) {
        MixedSweepResult res =
            conjecture_mixed_sweep(corpus_domain(name).domain, Int(0), 3, 1);
        CHECK(res.found);
        REQUIRE(res.candidate.has_value());
        CHECK(res.candidate->is_point());
        CHECK(res.radius == 0);
    }
}

TEST_CASE("gcd sweep classification") {
    std::vector<std::pair<std::string, WeightSequence>> ws;
    for (const char* name : {"delta2", "omega1", "e23", "rect_2x3"})
        ws.push_back({name, weight_sequence(corpus_domain(name).domain)});
    auto entries = conjecture_gcd_sweep(ws, Int(15));
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].status == GcdSweepStatus::excluded);
    CHECK(entries[0].gcd == 2);
    CHECK(entries[1].status == GcdSweepStatus::unit_weight);
    CHECK(entries[1].r0 == 0);
    CHECK(entries[2].status == GcdSweepStatus::found);
    CHECK(entries[2].r0 <= 3);
    CHECK(entries[3].status != GcdSweepStatus::excluded);
}
