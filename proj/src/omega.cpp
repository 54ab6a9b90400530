#include "ech/omega.hpp"

#include <stdexcept>

#include <boost/integer/common_factor.hpp>

namespace ech {

Rat omega_length(const ConvexDomain& omega, const Point2& v) {
    const auto& verts = omega.polygon.vertices();
    Rat best = cross(v, verts[0]);
    for (size_t i = 1; i < verts.size(); ++i) {
        Rat c = cross(v, verts[i]);
        if (c > best) best = c;
    }
    return best;
}

Rat omega_perimeter(const ConvexDomain& omega, const ConvexPolygon& L) {
    const auto& v = L.vertices();
    if (v.size() == 1) return 0;
    if (v.size() == 2)
        return omega_length(omega, v[1] - v[0]) + omega_length(omega, v[0] - v[1]);
    Rat total = 0;
    for (size_t i = 0; i < v.size(); ++i)
        total += omega_length(omega, v[(i + 1) % v.size()] - v[i]);
    return total;
}

namespace {

// Primitive integer vector in the direction of a nonzero rational vector.
Point2 primitive_direction(const Point2& v) {
    Int s = boost::integer::lcm(rat_den(v.x), rat_den(v.y));
    Int x = rat_num(v.x) * (s / rat_den(v.x));
    Int y = rat_num(v.y) * (s / rat_den(v.y));
    Int g = boost::integer::gcd(Int(abs(x)), Int(abs(y)));
    return {Rat(x / g), Rat(y / g)};
}

}  // namespace

std::vector<Point2> edge_slopes(const ConvexPolygon& P) {
    const auto& v = P.vertices();
    std::vector<Point2> slopes;
    if (v.size() < 2) return slopes;
    if (v.size() == 2) {
        slopes.push_back(primitive_direction(v[1] - v[0]));
        slopes.push_back(primitive_direction(v[0] - v[1]));
        return slopes;
    }
    for (size_t i = 0; i < v.size(); ++i)
        slopes.push_back(primitive_direction(v[(i + 1) % v.size()] - v[i]));
    return slopes;
}

ConvexPolygon stretch(const ConvexDomain& omega, const ConvexPolygon& L) {
    if (omega.polygon.is_degenerate())
        throw std::invalid_argument("stretch: degenerate reference domain");
    ConvexDomain d_L{L, is_lattice_polygon(L), false};
    std::vector<Halfplane> hs;
    for (const auto& v : edge_slopes(omega.polygon)) {
        // {u : v x u <= max over L of v x u}, the support halfplane of L
        // with boundary slope v.
        hs.push_back({-v.y, v.x, omega_length(d_L, v)});
    }
    auto res = halfplane_intersection(hs);
    if (!res) throw std::logic_error("stretch: empty intersection");
    return *res;
}

Rat dual_norm_length(const ConvexDomain& omega, const Point2& v_star,
                     const std::vector<Point2>& path_edges) {
    if (!omega.is_free)
        throw std::invalid_argument("dual_norm_length: domain is not free");
    const auto& verts = omega.polygon.vertices();
    if (omega.polygon.is_degenerate())
        throw std::invalid_argument("dual_norm_length: degenerate domain");
    for (size_t i = 0; i < verts.size(); ++i)
        if (cross(verts[(i + 1) % verts.size()] - verts[i], v_star - verts[i]) >= 0)
            throw std::invalid_argument("dual_norm_length: base point not interior");
    Rat total = 0;
    for (const auto& e : path_edges) {
        Rat best = dot(e, verts[0] - v_star);
        for (size_t i = 1; i < verts.size(); ++i) {
            Rat c = dot(e, verts[i] - v_star);
            if (c > best) best = c;
        }
        total += best;
    }
    return total;
}

Point2 centroid(const ConvexPolygon& P) {
    Rat sx = 0, sy = 0;
    for (const auto& v : P.vertices()) {
        sx += v.x;
        sy += v.y;
    }
    Rat n(Int(P.size()));
    return {sx / n, sy / n};
}

Rat free_length(const ConvexDomain& omega, const ConvexPolygon& L) {
    const auto& v = L.vertices();
    std::vector<Point2> edges;
    if (v.size() == 2) {
        edges.push_back(v[1] - v[0]);
        edges.push_back(v[0] - v[1]);
    } else if (v.size() >= 3) {
        for (size_t i = 0; i < v.size(); ++i)
            edges.push_back(v[(i + 1) % v.size()] - v[i]);
    }
    return dual_norm_length(omega, centroid(omega.polygon), edges);
}

}  // namespace ech
