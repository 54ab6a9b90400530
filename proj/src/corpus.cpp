#include "ech/corpus.hpp"

#include <stdexcept>

namespace ech {

namespace {

Point2 pt(long long x, long long y) { return {Rat(x), Rat(y)}; }

std::vector<NamedDomain> build_corpus() {
    std::vector<NamedDomain> c;
    auto std_dom = [&](std::string name, std::vector<Point2> pts, std::string note) {
        c.push_back({std::move(name),
                     ConvexDomain::standard(ConvexPolygon::from_points(std::move(pts))),
                     std::move(note)});
    };
    std_dom("delta1", {pt(0, 0), pt(1, 0), pt(0, 1)}, "unit triangle; weights (1;;), the unit ball");
    std_dom("delta2", {pt(0, 0), pt(2, 0), pt(0, 2)},
            "doubled triangle, equal to the ball of size 2; weight gcd 2");
    std_dom("unit_square", {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, "unit square, P(1,1)");
    std_dom("rect_1x2", {pt(0, 0), pt(1, 0), pt(1, 2), pt(0, 2)},
            "rectangle [0,1]x[0,2], the polydisk P(1,2); weights (3;1;2)");
    std_dom("rect_2x3", {pt(0, 0), pt(2, 0), pt(2, 3), pt(0, 3)},
            "rectangle [0,2]x[0,3]; weights (5;2;3): gcd 1 but no unit weight");
    std_dom("omega1", {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 2)},
            "quadrilateral with weights (2;;1); its normal fan is the first Hirzebruch fan");
    std_dom("omega2", {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 4)},
            "doubled omega1; weights (4;;2), gcd 2");
    std_dom("e12", {pt(0, 0), pt(1, 0), pt(0, 2)}, "right triangle with legs 1 and 2");
    std_dom("e23", {pt(0, 0), pt(2, 0), pt(0, 3)},
            "right triangle with legs 2 and 3; weights (3;;1,1,1)");
    c.push_back({"free_square",
                 ConvexDomain::free(ConvexPolygon::from_points(
                     {pt(1, 1), pt(2, 1), pt(2, 2), pt(1, 2)})),
                 "unit square at [1,2]^2, away from both axes"});
    std_dom("half_triangle", {pt(0, 0), pt(1, 0), {Rat(0), Rat(1) / 2}},
            "rational triangle with legs 1 and 1/2; Ehrhart function has period 2");
    return c;
}

}  // namespace

const std::vector<NamedDomain>& corpus() {
    static const std::vector<NamedDomain> c = build_corpus();
    return c;
}

const NamedDomain& corpus_domain(const std::string& name) {
    for (const auto& d : corpus())
        if (d.name == name) return d;
    std::string known;
    for (const auto& d : corpus()) known += (known.empty() ? "" : ", ") + d.name;
    throw std::invalid_argument("unknown domain '" + name + "'; known: " + known);
}

}  // namespace ech
