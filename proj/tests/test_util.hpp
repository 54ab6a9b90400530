#pragma once

#include <vector>

#include "ech/geometry.hpp"

namespace ech::testutil {

inline Point2 pt(long long x, long long y) { return {Rat(x), Rat(y)}; }

inline ConvexPolygon poly(const std::vector<std::pair<long long, long long>>& pts) {
    std::vector<Point2> v;
    for (const auto& [x, y] : pts) v.push_back(pt(x, y));
    return ConvexPolygon::from_points(v);
}

inline ConvexPolygon tri(long long n) { return poly({{0, 0}, {n, 0}, {0, n}}); }

}  // namespace ech::testutil
